use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Yangian;
use crate::error::RttError;
use crate::scalar::int;
use crate::series::{AlgebraSeries, SeriesMatrix};
use crate::algebra::Word;

/// Which Gauss factorization of `T(u)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GaussVariant {
    /// `T = F K E` with `F` lower and `E` upper unitriangular.
    LowerDiagUpper,
    /// `T = E~ K~ F~` with `E~` upper and `F~` lower unitriangular.
    UpperDiagLower,
}

/// Components of a Gauss decomposition. `e[(i, j)]` with `i < j` sits
/// above the diagonal, `f[(j, i)]` with `j > i` below it.
#[derive(Clone, Debug)]
pub struct GaussFactors {
    pub variant: GaussVariant,
    pub e: BTreeMap<(usize, usize), AlgebraSeries>,
    pub f: BTreeMap<(usize, usize), AlgebraSeries>,
    pub k: Vec<AlgebraSeries>,
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

fn with(mut xs: Vec<usize>, x: usize) -> Vec<usize> {
    xs.push(x);
    xs
}

fn prepend(x: usize, xs: Vec<usize>) -> Vec<usize> {
    let mut out = vec![x];
    out.extend(xs);
    out
}

impl Yangian {
    /// Gauss components as ratios of quantum minors.
    ///
    /// Lower-diagonal-upper:
    /// `e_ij(u+i-1) = t(1..i)^{-1} t(1..i-1,i; 1..i-1,j)`,
    /// `f_ji(u+i-1) = t(1..i-1,j; 1..i-1,i) t(1..i)^{-1}`,
    /// `k_j(u+j-1) = t(1..j) t(1..j-1)^{-1}`.
    ///
    /// Upper-diagonal-lower:
    /// `e~_ij(u+n-j) = t(i,j+1..n; j..n) t(j..n)^{-1}`,
    /// `f~_ji(u+n-j) = t(j..n)^{-1} t(j..n; i,j+1..n)`,
    /// `k~_i(u+n-i) = t(i+1..n)^{-1} t(i..n)`.
    pub fn gauss_decompose(&self, variant: GaussVariant) -> Result<GaussFactors, RttError> {
        self.gauss_with_denominator(variant, false)
    }

    /// The upper-diagonal-lower components with the complementary minor
    /// `t(j+1..n)` as the denominator of `e~` and `f~` (this does not
    /// reproduce `T(u)`; kept for comparison).
    pub fn gauss_upper_short_denominator(&self) -> Result<GaussFactors, RttError> {
        self.gauss_with_denominator(GaussVariant::UpperDiagLower, true)
    }

    fn gauss_with_denominator(&self, variant: GaussVariant, short: bool) -> Result<GaussFactors, RttError> {
        let n = self.n();
        let alg = self.algebra();
        let back = |s: AlgebraSeries, c: usize| s.shift(&int(-(c as i64)));
        let mut e = BTreeMap::new();
        let mut f = BTreeMap::new();
        let mut k = Vec::with_capacity(n);
        match variant {
            GaussVariant::LowerDiagUpper => {
                for i in 1..n {
                    let lead = self.minor(&range(1, i), &range(1, i))?;
                    let lead_inv = lead.inverse(alg)?;
                    for j in i + 1..=n {
                        let upper = self.minor(&range(1, i), &with(range(1, i - 1), j))?;
                        e.insert((i, j), back(lead_inv.mul(alg, &upper), i - 1));
                        let lower = self.minor(&with(range(1, i - 1), j), &range(1, i))?;
                        f.insert((j, i), back(lower.mul(alg, &lead_inv), i - 1));
                    }
                }
                for j in 1..=n {
                    let num = self.minor(&range(1, j), &range(1, j))?;
                    let den = self.minor(&range(1, j - 1), &range(1, j - 1))?;
                    k.push(back(num.mul(alg, &den.inverse(alg)?), j - 1));
                }
            }
            GaussVariant::UpperDiagLower => {
                for j in 2..=n {
                    let den_rows = if short { range(j + 1, n) } else { range(j, n) };
                    let den_inv = self.minor(&den_rows, &den_rows)?.inverse(alg)?;
                    for i in 1..j {
                        let upper = self.minor(&prepend(i, range(j + 1, n)), &range(j, n))?;
                        e.insert((i, j), back(upper.mul(alg, &den_inv), n - j));
                        let lower = self.minor(&range(j, n), &prepend(i, range(j + 1, n)))?;
                        f.insert((j, i), back(den_inv.mul(alg, &lower), n - j));
                    }
                }
                for i in 1..=n {
                    let den = self.minor(&range(i + 1, n), &range(i + 1, n))?;
                    let num = self.minor(&range(i, n), &range(i, n))?;
                    k.push(back(den.inverse(alg)?.mul(alg, &num), n - i));
                }
            }
        }
        Ok(GaussFactors { variant, e, f, k })
    }
}

impl GaussFactors {
    /// Multiplies the three factors back together.
    pub fn reconstruct(&self, y: &Yangian) -> SeriesMatrix<Word> {
        let n = y.n();
        let order = y.order();
        let alg = y.algebra();
        let one = AlgebraSeries::one(order);
        let upper = |a: usize, b: usize| -> AlgebraSeries {
            if a == b {
                one.clone()
            } else {
                self.e.get(&(a, b)).cloned().unwrap_or_else(|| AlgebraSeries::zero(order))
            }
        };
        let lower = |a: usize, b: usize| -> AlgebraSeries {
            if a == b {
                one.clone()
            } else {
                self.f.get(&(a, b)).cloned().unwrap_or_else(|| AlgebraSeries::zero(order))
            }
        };
        SeriesMatrix::from_fn(n, |a, b| {
            let mut acc = AlgebraSeries::zero(order);
            match self.variant {
                GaussVariant::LowerDiagUpper => {
                    for p in 1..=a.min(b) {
                        let term = lower(a, p).mul(alg, &self.k[p - 1]).mul(alg, &upper(p, b));
                        acc = acc.add(&term);
                    }
                }
                GaussVariant::UpperDiagLower => {
                    for p in a.max(b)..=n {
                        let term = upper(a, p).mul(alg, &self.k[p - 1]).mul(alg, &lower(p, b));
                        acc = acc.add(&term);
                    }
                }
            }
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuotientMode;

    #[test]
    fn n2_components() {
        let y = Yangian::new(2, 3, QuotientMode::Gl).unwrap();
        let alg = y.algebra();
        let g = y.gauss_decompose(GaussVariant::LowerDiagUpper).unwrap();
        let t11_inv = y.entry(1, 1).inverse(alg).unwrap();
        assert_eq!(g.k[0], *y.entry(1, 1));
        assert_eq!(g.e[&(1, 2)], t11_inv.mul(alg, y.entry(1, 2)));
        assert_eq!(g.f[&(2, 1)], y.entry(2, 1).mul(alg, &t11_inv));
    }

    #[test]
    fn both_variants_reconstruct() {
        for (n, order) in [(2, 4), (3, 3)] {
            let y = Yangian::new(n, order, QuotientMode::Gl).unwrap();
            for v in [GaussVariant::LowerDiagUpper, GaussVariant::UpperDiagLower] {
                let g = y.gauss_decompose(v).unwrap();
                assert_eq!(g.reconstruct(&y), *y.t(), "n={n} {v:?}");
            }
        }
    }

    #[test]
    fn short_denominator_fails_to_reconstruct() {
        let y = Yangian::new(2, 2, QuotientMode::Gl).unwrap();
        let g = y.gauss_upper_short_denominator().unwrap();
        assert_ne!(g.reconstruct(&y), *y.t());
    }
}
