//! Generating matrix `T(u)`, quantum determinant and quantum minors.

mod gauss;
mod inverse;
mod rmatrix;

use dashmap::DashMap;
use num_traits::{One, Zero};

use crate::algebra::{Algebra, Element, Generator, QuotientMode, Ring, Word};
use crate::error::{AlgebraError, RttError};
use crate::report::VerificationReport;
use crate::scalar::{int, Rational};
use crate::series::{AlgebraSeries, Series, SeriesMatrix};

pub use gauss::{GaussFactors, GaussVariant};
pub use rmatrix::{r_matrix, ybe_unitarity_check, DenseMatrix};

/// `T(u)` with entries `delta_ij + sum_k T_ij^(k) u^{-k}` up to the
/// truncation degree of `alg`.
pub fn t_matrix(alg: &Algebra) -> SeriesMatrix<Word> {
    let order = alg.max_degree() as usize;
    SeriesMatrix::from_fn(alg.n(), |i, j| {
        let constant = if i == j { Rational::one() } else { Rational::zero() };
        let coeffs = (1..=order as u32)
            .map(|k| alg.generator_unchecked(i, j, k))
            .collect();
        Series::new(constant, coeffs)
    })
}

/// Signed sum `sum_sigma sgn(sigma) M_{a_sigma(1), b_1}(u) ... M_{a_sigma(m), b_m}(u+m-1)`.
///
/// Rows and columns are taken as given (no sorting), so repeated or
/// unordered indices produce whatever the raw sum produces.
pub fn minor_column_form<R: Ring>(
    ring: &R,
    matrix: &SeriesMatrix<R::Key>,
    rows: &[usize],
    cols: &[usize],
) -> Series<R::Key> {
    let m = rows.len();
    assert_eq!(m, cols.len(), "minor needs as many rows as columns");
    let order = matrix.order();
    if m == 0 {
        return Series::one(order);
    }
    // shifted[p][q] = M_{rows[q], cols[p]}(u + p)
    let shifted: Vec<Vec<Series<R::Key>>> = (0..m)
        .map(|p| {
            rows.iter()
                .map(|&a| matrix.entry(a, cols[p]).shift(&int(p as i64)))
                .collect()
        })
        .collect();
    let mut total = Series::zero(order);
    let mut used = vec![false; m];
    signed_products(ring, &mut used, 0, &Series::one(order), 1, &mut |p| shifted[p.0][p.1].clone(), &mut total);
    total
}

/// Signed sum `sum_sigma sgn(sigma) M_{a_1, b_sigma(1)}(u+m-1) ... M_{a_m, b_sigma(m)}(u)`.
pub fn minor_row_form<R: Ring>(
    ring: &R,
    matrix: &SeriesMatrix<R::Key>,
    rows: &[usize],
    cols: &[usize],
) -> Series<R::Key> {
    let m = rows.len();
    assert_eq!(m, cols.len(), "minor needs as many rows as columns");
    let order = matrix.order();
    if m == 0 {
        return Series::one(order);
    }
    // shifted[p][q] = M_{rows[p], cols[q]}(u + m - 1 - p)
    let shifted: Vec<Vec<Series<R::Key>>> = (0..m)
        .map(|p| {
            cols.iter()
                .map(|&b| matrix.entry(rows[p], b).shift(&int((m - 1 - p) as i64)))
                .collect()
        })
        .collect();
    let mut total = Series::zero(order);
    let mut used = vec![false; m];
    signed_products(ring, &mut used, 0, &Series::one(order), 1, &mut |p| shifted[p.0][p.1].clone(), &mut total);
    total
}

/// Depth-first walk over permutations sharing prefix products. `factor`
/// maps (position, chosen index) to the series placed at that position.
fn signed_products<R: Ring>(
    ring: &R,
    used: &mut Vec<bool>,
    position: usize,
    prefix: &Series<R::Key>,
    sign: i64,
    factor: &mut dyn FnMut((usize, usize)) -> Series<R::Key>,
    total: &mut Series<R::Key>,
) {
    let m = used.len();
    if position == m {
        *total = total.add(&prefix.scale(&int(sign)));
        return;
    }
    // the sign of a permutation built left to right: choosing index q
    // passes over the unused indices smaller than q
    let mut smaller_unused = 0;
    for q in 0..m {
        if used[q] {
            continue;
        }
        let f = factor((position, q));
        let s = if smaller_unused % 2 == 0 { sign } else { -sign };
        smaller_unused += 1;
        if f.is_zero() {
            continue;
        }
        let next = prefix.mul(ring, &f);
        if next.is_zero() {
            continue;
        }
        used[q] = true;
        signed_products(ring, used, position + 1, &next, s, factor, total);
        used[q] = false;
    }
}

pub fn qdet_of<R: Ring>(ring: &R, matrix: &SeriesMatrix<R::Key>) -> Series<R::Key> {
    let idx: Vec<usize> = (1..=matrix.dim()).collect();
    minor_column_form(ring, matrix, &idx, &idx)
}

/// Sorted row and column sets of a quantum minor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MinorKey {
    pub rows: Vec<u8>,
    pub cols: Vec<u8>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExpansionSide {
    LastColumn,
    LastRow,
}

/// Sign of the permutation sorting `xs`, or `None` on a repeated entry.
fn sort_sign(xs: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut sorted = xs.to_vec();
    let mut sign = 1;
    for i in 0..sorted.len() {
        for j in 0..sorted.len() - 1 - i {
            if sorted[j] == sorted[j + 1] {
                return None;
            }
            if sorted[j] > sorted[j + 1] {
                sorted.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, sorted))
}

/// A truncated Yangian with its generating matrix and a shared minor cache.
pub struct Yangian {
    alg: Algebra,
    t: SeriesMatrix<Word>,
    minors: DashMap<MinorKey, AlgebraSeries>,
}

impl std::fmt::Debug for Yangian {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Yangian").field("alg", &self.alg).finish()
    }
}

impl Yangian {
    pub fn new(n: usize, order: u32, mode: QuotientMode) -> Result<Self, AlgebraError> {
        let alg = Algebra::new(n, order, mode)?;
        let t = t_matrix(&alg);
        Ok(Yangian {
            alg,
            t,
            minors: DashMap::new(),
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn order(&self) -> usize {
        self.alg.max_degree() as usize
    }

    pub fn mode(&self) -> QuotientMode {
        self.alg.mode()
    }

    pub fn t(&self) -> &SeriesMatrix<Word> {
        &self.t
    }

    pub fn entry(&self, i: usize, j: usize) -> &AlgebraSeries {
        self.t.entry(i, j)
    }

    pub fn generator(&self, i: usize, j: usize, k: u32) -> Element {
        self.alg.generator_unchecked(i, j, k)
    }

    pub fn qdet(&self) -> AlgebraSeries {
        let idx: Vec<usize> = (1..=self.n()).collect();
        self.minor(&idx, &idx).expect("full index set is valid")
    }

    fn check_indices(&self, xs: &[usize]) -> Result<(), RttError> {
        if let Some(&bad) = xs.iter().find(|&&x| x < 1 || x > self.n()) {
            return Err(RttError::InvalidMinor(format!("index {bad} out of range 1..={}", self.n())));
        }
        Ok(())
    }

    /// Quantum minor `t(rows; cols)(u)`. Unordered index lists are sorted
    /// with the matching sign; repeated indices give zero.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<AlgebraSeries, RttError> {
        if rows.len() != cols.len() {
            return Err(RttError::InvalidMinor(format!("{} rows vs {} columns", rows.len(), cols.len())));
        }
        self.check_indices(rows)?;
        self.check_indices(cols)?;
        let (Some((sr, rows)), Some((sc, cols))) = (sort_sign(rows), sort_sign(cols)) else {
            return Ok(AlgebraSeries::zero(self.order()));
        };
        let key = MinorKey {
            rows: rows.iter().map(|&x| x as u8).collect(),
            cols: cols.iter().map(|&x| x as u8).collect(),
        };
        let base = match self.minors.get(&key) {
            Some(hit) => hit.clone(),
            None => {
                let s = minor_column_form(&self.alg, &self.t, &rows, &cols);
                self.minors.insert(key, s.clone());
                s
            }
        };
        Ok(if sr * sc == 1 { base } else { base.neg() })
    }

    /// Minor from the defining column-form sum, with indices used verbatim.
    pub fn minor_unreduced(&self, rows: &[usize], cols: &[usize]) -> Result<AlgebraSeries, RttError> {
        if rows.len() != cols.len() {
            return Err(RttError::InvalidMinor(format!("{} rows vs {} columns", rows.len(), cols.len())));
        }
        self.check_indices(rows)?;
        self.check_indices(cols)?;
        Ok(minor_column_form(&self.alg, &self.t, rows, cols))
    }

    /// Minor from the row-form sum.
    pub fn minor_row_form(&self, rows: &[usize], cols: &[usize]) -> Result<AlgebraSeries, RttError> {
        if rows.len() != cols.len() {
            return Err(RttError::InvalidMinor(format!("{} rows vs {} columns", rows.len(), cols.len())));
        }
        self.check_indices(rows)?;
        self.check_indices(cols)?;
        Ok(minor_row_form(&self.alg, &self.t, rows, cols))
    }

    /// Expansion along the last column
    /// `sum_k (-1)^{k+m} t(A - a_k; b_1..b_{m-1})(u) T_{a_k,b_m}(u+m-1)`
    /// or the last row
    /// `sum_k (-1)^{k+m} T_{a_m,b_k}(u+m-1) t(a_1..a_{m-1}; B - b_k)(u)`.
    pub fn minor_expand(&self, rows: &[usize], cols: &[usize], side: ExpansionSide) -> Result<AlgebraSeries, RttError> {
        let m = rows.len();
        if m < 1 || cols.len() != m {
            return Err(RttError::InvalidMinor("expansion needs a minor of size at least 1".into()));
        }
        self.check_indices(rows)?;
        self.check_indices(cols)?;
        let shift = int(m as i64 - 1);
        let mut total = AlgebraSeries::zero(self.order());
        for k in 1..=m {
            let sign = if (k + m).is_multiple_of(2) { int(1) } else { int(-1) };
            let term = match side {
                ExpansionSide::LastColumn => {
                    let sub_rows: Vec<usize> = rows.iter().enumerate().filter(|(p, _)| p + 1 != k).map(|(_, &a)| a).collect();
                    let sub = self.minor(&sub_rows, &cols[..m - 1])?;
                    sub.mul(&self.alg, &self.entry(rows[k - 1], cols[m - 1]).shift(&shift))
                }
                ExpansionSide::LastRow => {
                    let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|(p, _)| p + 1 != k).map(|(_, &b)| b).collect();
                    let sub = self.minor(&rows[..m - 1], &sub_cols)?;
                    self.entry(rows[m - 1], cols[k - 1]).shift(&shift).mul(&self.alg, &sub)
                }
            };
            total = total.add(&term.scale(&sign));
        }
        Ok(total)
    }

    /// Checks the commutation relation of `T_ij(u)` with `t(rows; cols)(v)`
    ///
    /// `(u-v) [T_ij(u), t(v)] = sum_k ( t(b_k -> j)(v) T_{i,b_k}(u) - T_{a_k,j}(u) t(a_k -> i)(v) )`
    ///
    /// by matching coefficients of `u^{-r} v^{-s}` for `r + s <= N`. When
    /// `i` is a row and `j` a column of the minor, also checks that the
    /// commutator vanishes mode by mode.
    pub fn minor_commutator_check(&self, i: usize, j: usize, rows: &[usize], cols: &[usize]) -> Result<VerificationReport, RttError> {
        self.check_indices(&[i, j])?;
        let minor = self.minor(rows, cols)?;
        let n_max = self.order();
        let mut report = VerificationReport::new("minor-commutator")
            .with_param("n", self.n())
            .with_param("order", n_max)
            .with_param("i", i)
            .with_param("j", j)
            .with_param("rows", rows.to_vec())
            .with_param("cols", cols.to_vec());
        let m = rows.len();
        let mut replaced_col = Vec::with_capacity(m);
        let mut replaced_row = Vec::with_capacity(m);
        for k in 0..m {
            let mut c = cols.to_vec();
            c[k] = j;
            replaced_col.push(self.minor(rows, &c)?);
            let mut r = rows.to_vec();
            r[k] = i;
            replaced_row.push(self.minor(&r, cols)?);
        }
        let t_mode = |a: usize, b: usize, r: usize| -> Element {
            if r == 0 {
                if a == b { Element::one() } else { Element::zero() }
            } else {
                self.generator(a, b, r as u32)
            }
        };
        let comm = |r: usize, s: usize| -> Element {
            if r == 0 || s == 0 {
                return Element::zero();
            }
            self.alg.commutator(&t_mode(i, j, r), &minor.coeff(s))
        };
        for total in 0..=n_max {
            for r in 0..=total {
                let s = total - r;
                let lhs = &comm(r + 1, s) - &comm(r, s + 1);
                let mut rhs = Element::zero();
                for k in 0..m {
                    rhs += &self.alg.mul(&replaced_col[k].coeff(s), &t_mode(i, cols[k], r));
                    rhs -= &self.alg.mul(&t_mode(rows[k], j, r), &replaced_row[k].coeff(s));
                }
                report.check_eq(&format!("u^-{r} v^-{s}"), total, &lhs, &rhs);
            }
        }
        if rows.contains(&i) && cols.contains(&j) {
            for r in 1..=n_max {
                for s in 1..=(n_max + 1 - r) {
                    report.check_zero(&format!("central r={r} s={s}"), r + s - 1, &comm(r, s));
                }
            }
        }
        Ok(report)
    }

    /// `t(1..p, p+i; 1..p, p+j)(u)`, the image of `T_ij(u)` under the
    /// embedding of the rank `n-p` Yangian.
    pub fn minor_embedding(&self, p: usize, i: usize, j: usize) -> Result<AlgebraSeries, RttError> {
        if p >= self.n() || i < 1 || j < 1 || i > self.n() - p || j > self.n() - p {
            return Err(RttError::Range(format!("p={p}, i={i}, j={j} for n={}", self.n())));
        }
        let mut rows: Vec<usize> = (1..=p).collect();
        let mut cols = rows.clone();
        rows.push(p + i);
        cols.push(p + j);
        self.minor(&rows, &cols)
    }

    /// Checks that the embedded images satisfy the RTT relation
    /// `-(u-v)[X_ij(u), X_kl(v)] = X_kj(u) X_il(v) - X_kj(v) X_il(u)`
    /// coefficientwise for `r + s <= N`.
    pub fn minor_embedding_check(&self, p: usize) -> Result<VerificationReport, RttError> {
        let size = self.n() - p;
        let mut images = Vec::new();
        for i in 1..=size {
            for j in 1..=size {
                images.push(self.minor_embedding(p, i, j)?);
            }
        }
        let x = |i: usize, j: usize| &images[(i - 1) * size + (j - 1)];
        let n_max = self.order();
        let mut report = VerificationReport::new("minor-embedding")
            .with_param("n", self.n())
            .with_param("p", p)
            .with_param("order", n_max);
        let comm = |a: &AlgebraSeries, b: &AlgebraSeries, r: usize, s: usize| -> Element {
            if r == 0 || s == 0 {
                return Element::zero();
            }
            self.alg.commutator(&a.coeff(r), &b.coeff(s))
        };
        for i in 1..=size {
            for j in 1..=size {
                for k in 1..=size {
                    for l in 1..=size {
                        for total in 0..=n_max {
                            for r in 0..=total {
                                let s = total - r;
                                let lhs = -(&comm(x(i, j), x(k, l), r + 1, s) - &comm(x(i, j), x(k, l), r, s + 1));
                                let rhs = &self.alg.mul(&x(k, j).coeff(r), &x(i, l).coeff(s))
                                    - &self.alg.mul(&x(k, j).coeff(s), &x(i, l).coeff(r));
                                report.check_eq(&format!("({i}{j},{k}{l}) u^-{r} v^-{s}"), total, &lhs, &rhs);
                            }
                        }
                    }
                }
            }
        }
        Ok(report)
    }

    /// SL-mode check that every coefficient of `qdet T(u) - 1` vanishes.
    pub fn qdet_is_one(&self) -> VerificationReport {
        let q = self.qdet();
        let mut report = VerificationReport::new("qdet-one")
            .with_param("n", self.n())
            .with_param("order", self.order())
            .with_param("mode", self.mode().to_string());
        report.check_series("qdet - 1", &q, &AlgebraSeries::one(self.order()), self.order());
        report
    }

    /// `[qdet^(k), T_ij^(l)] = 0` for `k + l <= max_total`.
    pub fn qdet_centrality(&self, max_total: usize) -> VerificationReport {
        let q = self.qdet();
        let mut report = VerificationReport::new("qdet-central")
            .with_param("n", self.n())
            .with_param("order", self.order());
        for k in 1..max_total {
            for l in 1..=(max_total - k) {
                if k + l - 1 > self.order() {
                    continue;
                }
                for i in 1..=self.n() {
                    for j in 1..=self.n() {
                        let c = self.alg.commutator(&q.coeff(k), &self.generator(i, j, l as u32));
                        report.check_zero(&format!("k={k} T{i}{j}^({l})"), k + l - 1, &c);
                    }
                }
            }
        }
        report
    }
}

/// `T_{ij}^{(k)}` as a generator symbol.
pub fn symbol(i: usize, j: usize, k: u32) -> Generator {
    Generator::new(i, j, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(n: usize, order: u32) -> Yangian {
        Yangian::new(n, order, QuotientMode::Gl).unwrap()
    }

    #[test]
    fn qdet_n2_matches_displayed_sum() {
        let y = gl(2, 3);
        let alg = y.algebra();
        let one = int(1);
        let want = y
            .entry(1, 1)
            .mul(alg, &y.entry(2, 2).shift(&one))
            .sub(&y.entry(2, 1).mul(alg, &y.entry(1, 2).shift(&one)));
        assert_eq!(y.qdet(), want);
        assert_eq!(y.qdet().coeff(1), &y.generator(1, 1, 1) + &y.generator(2, 2, 1));
    }

    #[test]
    fn sl_qdet_is_one() {
        for n in [2, 3] {
            let y = Yangian::new(n, 3, QuotientMode::Sl).unwrap();
            assert!(y.qdet_is_one().passed(), "n = {n}");
        }
    }

    #[test]
    fn minor_examples() {
        let y = gl(3, 2);
        let m = y.minor(&[1, 2], &[1, 3]).unwrap();
        assert_eq!(m.coeff(1), y.generator(2, 3, 1));
        assert!(y.minor(&[1, 1], &[1, 2]).unwrap().is_zero());
        assert!(y.minor_unreduced(&[1, 2], &[2, 2]).unwrap().is_zero());
        assert_eq!(y.minor(&[], &[]).unwrap(), AlgebraSeries::one(2));
        assert_eq!(y.minor(&[1, 2, 3], &[1, 2, 3]).unwrap(), y.qdet());
        assert_eq!(y.minor(&[2], &[3]).unwrap(), *y.entry(2, 3));
    }

    #[test]
    fn expansions_n2() {
        let y = gl(2, 3);
        let col = y.minor_expand(&[1, 2], &[1, 2], ExpansionSide::LastColumn).unwrap();
        assert_eq!(col, y.qdet());
        let row = y.minor_expand(&[1, 2], &[1, 2], ExpansionSide::LastRow).unwrap();
        assert_eq!(row, y.qdet());
        assert_eq!(y.minor_expand(&[2], &[1], ExpansionSide::LastRow).unwrap(), *y.entry(2, 1));
    }

    #[test]
    fn commutator_examples() {
        let y2 = gl(2, 3);
        assert!(y2.minor_commutator_check(1, 2, &[1, 2], &[1, 2]).unwrap().passed());
        let y3 = gl(3, 2);
        assert!(y3.minor_commutator_check(1, 2, &[1, 2], &[1, 2]).unwrap().passed());
        assert!(y3.minor_commutator_check(1, 3, &[1, 2], &[1, 2]).unwrap().passed());
    }

    #[test]
    fn embedding_examples() {
        let y2 = gl(2, 3);
        assert_eq!(y2.minor_embedding(1, 1, 1).unwrap(), y2.qdet());
        assert!(y2.minor_embedding(2, 1, 1).is_err());
        let y3 = gl(3, 2);
        assert!(y3.minor_embedding_check(1).unwrap().passed());
    }

    #[test]
    fn centrality() {
        assert!(gl(2, 3).qdet_centrality(4).passed());
    }
}
