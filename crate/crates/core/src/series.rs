//! Truncated formal series in `u^{-1}` with algebra-valued coefficients.
//!
//! A series stores a scalar constant term and the coefficients of
//! `u^{-1} .. u^{-order}`. Every arithmetic result is exact through its
//! recorded order; binary operations use the smaller of the two orders.

use num_traits::{One, Zero};

use crate::algebra::{LinComb, Monomial, Ring, Word};
use crate::error::SeriesError;
use crate::scalar::{format_rational, negative_binomial, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<K: Monomial> {
    constant: Rational,
    /// `coeffs[k - 1]` is the coefficient of `u^{-k}`.
    coeffs: Vec<LinComb<K>>,
}

pub type AlgebraSeries = Series<Word>;
pub type TensorSeries = Series<(Word, Word)>;
pub type Tensor3Series = Series<(Word, Word, Word)>;

impl<K: Monomial> Series<K> {
    pub fn new(constant: Rational, coeffs: Vec<LinComb<K>>) -> Self {
        Series { constant, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            constant: Rational::zero(),
            coeffs: vec![LinComb::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::scalar(Rational::one(), order)
    }

    pub fn scalar(c: Rational, order: usize) -> Self {
        Series {
            constant: c,
            coeffs: vec![LinComb::zero(); order],
        }
    }

    /// `x u^{-k}` as a series of the given order.
    pub fn monomial(x: LinComb<K>, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k == 0 {
            s.constant = x.constant_term();
        } else if k <= order {
            s.coeffs[k - 1] = x;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    /// Coefficient of `u^{-k}`; `k = 0` gives the constant times the unit.
    pub fn coeff(&self, k: usize) -> LinComb<K> {
        if k == 0 {
            LinComb::scalar(self.constant.clone())
        } else {
            self.coeffs.get(k - 1).cloned().unwrap_or_default()
        }
    }

    pub fn coeff_ref(&self, k: usize) -> Option<&LinComb<K>> {
        if k == 0 {
            None
        } else {
            self.coeffs.get(k - 1)
        }
    }

    pub fn coeffs(&self) -> &[LinComb<K>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Smallest `k` with a nonzero `u^{-k}` coefficient.
    pub fn valuation(&self) -> Option<usize> {
        if !self.constant.is_zero() {
            return Some(0);
        }
        self.coeffs.iter().position(|c| !c.is_zero()).map(|p| p + 1)
    }

    pub fn truncated(&self, order: usize) -> Self {
        let mut out = self.clone();
        out.coeffs.truncate(order);
        out
    }

    /// Every `u^{-k}` coefficient has degree at most `k`.
    pub fn respects_filtration(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(p, c)| c.max_degree() as usize <= p + 1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Series {
            constant: &self.constant + &other.constant,
            coeffs: (0..order).map(|p| &self.coeffs[p] + &other.coeffs[p]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Series {
            constant: &self.constant - &other.constant,
            coeffs: (0..order).map(|p| &self.coeffs[p] - &other.coeffs[p]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            constant: &self.constant * c,
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// `s(u + c)` re-expanded in `u^{-1}`.
    pub fn shift(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let order = self.order();
        let mut out = Series::scalar(self.constant.clone(), order);
        let mut powers = vec![Rational::one()];
        for m in 1..order {
            let next = &powers[m - 1] * c;
            powers.push(next);
        }
        for k in 1..=order {
            let a = &self.coeffs[k - 1];
            if a.is_zero() {
                continue;
            }
            for m in 0..=(order - k) {
                let factor = negative_binomial(k as u32, m as u32) * &powers[m];
                out.coeffs[k + m - 1].add_scaled(a, &factor);
            }
        }
        out
    }

    /// `s(-u)`.
    pub fn negate_variable(&self) -> Self {
        Series {
            constant: self.constant.clone(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(p, x)| if p % 2 == 0 { -x } else { x.clone() })
                .collect(),
        }
    }

    /// Applies a linear map coefficientwise. The image of the constant term
    /// must again be a scalar.
    pub fn map_linear<K2: Monomial>(&self, mut f: impl FnMut(&LinComb<K>) -> LinComb<K2>) -> Series<K2> {
        let c = f(&LinComb::scalar(self.constant.clone()));
        debug_assert!(c.iter().all(|(k, _)| *k == K2::unit()));
        Series {
            constant: c.constant_term(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn mul<R: Ring<Key = K>>(&self, ring: &R, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Series::scalar(&self.constant * &other.constant, order);
        for m in 1..=order {
            let acc = &mut out.coeffs[m - 1];
            if !other.constant.is_zero() {
                acc.add_scaled(&self.coeffs[m - 1], &other.constant);
            }
            if !self.constant.is_zero() {
                acc.add_scaled(&other.coeffs[m - 1], &self.constant);
            }
            for k in 1..m {
                let a = &self.coeffs[k - 1];
                let b = &other.coeffs[m - k - 1];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                *acc += &ring.mul(a, b);
            }
        }
        out
    }

    pub fn commutator<R: Ring<Key = K>>(&self, ring: &R, other: &Self) -> Self {
        self.mul(ring, other).sub(&other.mul(ring, self))
    }

    /// Inverse of a series with unit constant term.
    pub fn inverse<R: Ring<Key = K>>(&self, ring: &R) -> Result<Self, SeriesError> {
        if !self.constant.is_one() {
            return Err(SeriesError::NotUnitConstant(format_rational(&self.constant)));
        }
        let order = self.order();
        let mut out = Series::one(order);
        for m in 1..=order {
            let mut acc = self.coeffs[m - 1].clone();
            for k in 1..m {
                let a = &self.coeffs[k - 1];
                let b = &out.coeffs[m - k - 1];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc += &ring.mul(a, b);
            }
            out.coeffs[m - 1] = -acc;
        }
        Ok(out)
    }

    /// `sum_{m >= 0} (-1)^m x^m`, iterated until the powers vanish below the
    /// working order. Requires a zero constant term.
    pub fn alternating_geometric_sum<R: Ring<Key = K>>(&self, ring: &R) -> Self {
        assert!(self.constant.is_zero(), "geometric sum needs a zero constant term");
        let order = self.order();
        let mut total = Series::one(order);
        let mut power = Series::one(order);
        let neg = self.neg();
        loop {
            power = power.mul(ring, &neg);
            if power.is_zero() {
                break;
            }
            total = total.add(&power);
        }
        total
    }
}

/// `a(u) ⊗ b(u)` as a tensor series.
pub fn tensor_series(a: &AlgebraSeries, b: &AlgebraSeries) -> TensorSeries {
    let order = a.order().min(b.order());
    let mut out = TensorSeries::scalar(a.constant() * b.constant(), order);
    for m in 1..=order {
        let mut acc = LinComb::zero();
        for k in 0..=m {
            let x = a.coeff(k);
            let y = b.coeff(m - k);
            if x.is_zero() || y.is_zero() {
                continue;
            }
            acc += &crate::algebra::tensor_product(&x, &y);
        }
        out.coeffs[m - 1] = acc;
    }
    out
}

/// Square matrix of series, row-major, indexed from 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesMatrix<K: Monomial> {
    dim: usize,
    entries: Vec<Series<K>>,
}

impl<K: Monomial> SeriesMatrix<K> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Series<K>) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 1..=dim {
            for j in 1..=dim {
                entries.push(f(i, j));
            }
        }
        SeriesMatrix { dim, entries }
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                Series::one(order)
            } else {
                Series::zero(order)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.entries.iter().map(|s| s.order()).min().unwrap_or(0)
    }

    pub fn entry(&self, i: usize, j: usize) -> &Series<K> {
        &self.entries[(i - 1) * self.dim + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<&Series<K>>> {
        (1..=self.dim)
            .map(|i| (1..=self.dim).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn map(&self, f: impl FnMut(&Series<K>) -> Series<K>) -> Self {
        SeriesMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        SeriesMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|s| s.is_zero())
    }

    pub fn mul<R: Ring<Key = K>>(&self, ring: &R, other: &Self) -> Result<Self, SeriesError> {
        if self.dim != other.dim {
            return Err(SeriesError::Dimension(self.dim, other.dim));
        }
        let order = self.order().min(other.order());
        Ok(Self::from_fn(self.dim, |i, j| {
            let mut acc = Series::zero(order);
            for k in 1..=self.dim {
                let a = self.entry(i, k);
                let b = other.entry(k, j);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(ring, b));
            }
            acc
        }))
    }

    /// Two-sided inverse of `I + A(u)` with `A` strictly negative in `u`.
    ///
    /// With `A_k` the coefficient matrices, the inverse `B = sum_m (-A)^m`
    /// satisfies `B_m = -sum_{k=1}^m A_k B_{m-k}`, which is the full matrix
    /// geometric series resummed order by order.
    pub fn inverse<R: Ring<Key = K>>(&self, ring: &R) -> Result<Self, SeriesError> {
        let dim = self.dim;
        for i in 1..=dim {
            for j in 1..=dim {
                let want = if i == j { Rational::one() } else { Rational::zero() };
                if *self.entry(i, j).constant() != want {
                    return Err(SeriesError::NotIdentityConstant);
                }
            }
        }
        let order = self.order();
        let idx = |i: usize, j: usize| (i - 1) * dim + (j - 1);
        // b[m][idx] = coefficient of u^{-m} in entry
        let mut b: Vec<Vec<LinComb<K>>> = vec![vec![LinComb::zero(); dim * dim]; order + 1];
        for i in 1..=dim {
            b[0][idx(i, i)] = LinComb::one();
        }
        for m in 1..=order {
            for i in 1..=dim {
                for j in 1..=dim {
                    let mut acc = LinComb::zero();
                    for k in 1..=m {
                        for l in 1..=dim {
                            let a = match self.entry(i, l).coeff_ref(k) {
                                Some(a) if !a.is_zero() => a,
                                _ => continue,
                            };
                            let rhs = &b[m - k][idx(l, j)];
                            if rhs.is_zero() {
                                continue;
                            }
                            acc += &ring.mul(a, rhs);
                        }
                    }
                    b[m][idx(i, j)] = -acc;
                }
            }
        }
        Ok(Self::from_fn(dim, |i, j| {
            let constant = b[0][idx(i, j)].constant_term();
            Series::new(constant, (1..=order).map(|m| b[m][idx(i, j)].clone()).collect())
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Element};
    use crate::scalar::{int, rat};

    fn sym(alg: &Algebra, i: usize, j: usize, k: u32) -> Element {
        alg.generator(i, j, k).unwrap()
    }

    #[test]
    fn shift_by_zero_and_by_one() {
        let alg = Algebra::gl(2, 3).unwrap();
        let e0 = sym(&alg, 1, 2, 1);
        let e1 = sym(&alg, 1, 2, 2);
        let s = Series::new(int(0), vec![e0.clone(), e1.clone(), Element::zero()]);
        assert_eq!(s.shift(&int(0)), s);
        let sh = s.shift(&int(1));
        assert_eq!(sh.coeff(1), e0);
        assert_eq!(sh.coeff(2), &e1 - &e0);
    }

    #[test]
    fn invert_examples() {
        let alg = Algebra::gl(2, 2).unwrap();
        assert_eq!(AlgebraSeries::one(2).inverse(&alg).unwrap(), AlgebraSeries::one(2));
        let a = sym(&alg, 1, 1, 1);
        let s = Series::new(int(1), vec![a.clone(), Element::zero()]);
        let inv = s.inverse(&alg).unwrap();
        assert_eq!(inv.coeff(1), -a.clone());
        assert_eq!(inv.coeff(2), alg.mul(&a, &a));
        let bad = Series::new(int(2), vec![a, Element::zero()]);
        assert!(matches!(bad.inverse(&alg), Err(SeriesError::NotUnitConstant(_))));
    }

    #[test]
    fn multiply_examples() {
        let alg = Algebra::gl(2, 2).unwrap();
        let x = sym(&alg, 1, 2, 1);
        let a = Series::new(int(1), vec![x.clone(), Element::zero()]);
        let b = Series::new(int(1), vec![-x.clone(), Element::zero()]);
        assert_eq!(a.mul(&alg, &AlgebraSeries::one(2)), a);
        let p = a.mul(&alg, &b);
        assert_eq!(p.coeff(1), Element::zero());
        assert_eq!(p.coeff(2), -alg.mul(&x, &x));

        let e0 = sym(&alg, 1, 2, 1);
        let f0 = sym(&alg, 2, 1, 1);
        let e = Series::new(int(0), vec![e0.clone(), Element::zero()]);
        let f = Series::new(int(0), vec![f0.clone(), Element::zero()]);
        assert_eq!(f.mul(&alg, &e).coeff(2), alg.mul(&f0, &e0));
    }

    #[test]
    fn half_shifts_compose() {
        let alg = Algebra::gl(2, 4).unwrap();
        let coeffs = (1..=4).map(|k| &sym(&alg, 1, 2, k) + &sym(&alg, 2, 2, 1)).collect();
        let s = Series::new(int(1), coeffs);
        let half = rat(1, 2);
        assert_eq!(s.shift(&half).shift(&half), s.shift(&int(1)));
        assert_eq!(s.shift(&rat(2, 3)).shift(&rat(-5, 3)), s.shift(&int(-1)));
    }

    #[test]
    fn negate_variable_twice_is_identity() {
        let alg = Algebra::gl(2, 3).unwrap();
        let s = Series::new(int(1), (1..=3).map(|k| sym(&alg, 2, 1, k)).collect());
        let neg = s.negate_variable();
        assert_eq!(neg.coeff(1), -sym(&alg, 2, 1, 1));
        assert_eq!(neg.coeff(2), sym(&alg, 2, 1, 2));
        assert_eq!(neg.negate_variable(), s);
    }

    #[test]
    fn geometric_sum_is_inverse_of_one_plus() {
        let alg = Algebra::gl(2, 4).unwrap();
        let x = Series::new(int(0), (1..=4).map(|k| sym(&alg, 1, 2, k) + sym(&alg, 2, 1, 1)).collect());
        let one_plus = x.add(&AlgebraSeries::one(4));
        assert_eq!(x.alternating_geometric_sum(&alg), one_plus.inverse(&alg).unwrap());
    }

    #[test]
    fn matrix_inverse_first_order() {
        let alg = Algebra::gl(2, 1).unwrap();
        let t = crate::rtt::t_matrix(&alg);
        let inv = t.inverse(&alg).unwrap();
        assert_eq!(inv.entry(1, 2).coeff(1), -sym(&alg, 1, 2, 1));
        let id = SeriesMatrix::<Word>::identity(2, 3);
        assert_eq!(id.inverse(&alg).unwrap(), id);
    }
}
