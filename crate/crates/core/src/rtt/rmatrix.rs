//! Yang's R-matrix `R(u) = I + P/u` as exact dense matrices.

use num_traits::{One, Zero};

use crate::error::RttError;
use crate::report::VerificationReport;
use crate::scalar::{format_rational, Rational};

/// Dense square matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Rational>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            data: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.dim + c]
    }

    fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.dim + c] = v;
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Product skipping zero entries of the left factor (R-matrices are sparse).
    pub fn mul(&self, other: &Self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.data[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.data[k * d + j];
                    if !b.is_zero() {
                        out.data[i * d + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// `R_{ab}(u)` acting on factors `a < b` (or `a > b`, same operator) of
/// `(C^n)^{⊗ factors}`.
pub fn r_matrix(n: usize, factors: usize, a: usize, b: usize, u: &Rational) -> Result<DenseMatrix, RttError> {
    if u.is_zero() {
        return Err(RttError::Pole(format!("u = {}", format_rational(u))));
    }
    let dim = n.pow(factors as u32);
    let inv = Rational::one() / u;
    let mut m = DenseMatrix::identity(dim);
    let stride = |f: usize| n.pow((factors - 1 - f) as u32);
    let (sa, sb) = (stride(a), stride(b));
    for idx in 0..dim {
        let da = (idx / sa) % n;
        let db = (idx / sb) % n;
        // swap the digits in positions a and b
        let swapped = idx - da * sa - db * sb + db * sa + da * sb;
        let cur = m.get(swapped, idx).clone();
        m.set(swapped, idx, cur + &inv);
    }
    Ok(m)
}

/// Checks `R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u)` and
/// `R12(u) R21(-u) = (u^2-1)/u^2 I`.
pub fn ybe_unitarity_check(n: usize, u: &Rational, v: &Rational) -> Result<VerificationReport, RttError> {
    let w = u + v;
    let r12 = r_matrix(n, 3, 0, 1, u)?;
    let r13 = r_matrix(n, 3, 0, 2, &w)?;
    let r23 = r_matrix(n, 3, 1, 2, v)?;
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);

    let mut report = VerificationReport::new("yang-baxter-unitarity")
        .with_param("n", n)
        .with_param("u", format_rational(u))
        .with_param("v", format_rational(v));
    if lhs != rhs {
        report.fail();
        report.note("Yang-Baxter equation violated");
    }
    let p12 = r_matrix(n, 2, 0, 1, u)?;
    let p21 = r_matrix(n, 2, 1, 0, &-u.clone())?;
    let factor = (u * u - Rational::one()) / (u * u);
    if p12.mul(&p21) != DenseMatrix::identity(n * n).scale(&factor) {
        report.fail();
        report.note("unitarity violated");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn ybe_examples() {
        assert!(ybe_unitarity_check(2, &int(2), &int(3)).unwrap().passed());
        assert!(ybe_unitarity_check(4, &rat(5, 2), &rat(-7, 3)).unwrap().passed());
    }

    #[test]
    fn unitarity_degenerates_at_one() {
        let r = r_matrix(2, 2, 0, 1, &int(1)).unwrap();
        let r21 = r_matrix(2, 2, 1, 0, &int(-1)).unwrap();
        assert_eq!(r.mul(&r21), DenseMatrix::zeros(4));
    }

    #[test]
    fn poles_are_reported() {
        assert!(matches!(ybe_unitarity_check(2, &int(1), &int(-1)), Err(RttError::Pole(_))));
        assert!(matches!(ybe_unitarity_check(2, &int(0), &int(1)), Err(RttError::Pole(_))));
    }

    #[test]
    fn wrong_middle_argument_breaks_ybe() {
        let n = 2;
        let (u, v) = (int(2), int(3));
        let w = &u - &v;
        let r12 = r_matrix(n, 3, 0, 1, &u).unwrap();
        let r13 = r_matrix(n, 3, 0, 2, &w).unwrap();
        let r23 = r_matrix(n, 3, 1, 2, &v).unwrap();
        assert_ne!(r12.mul(&r13).mul(&r23), r23.mul(&r13).mul(&r12));
    }
}
