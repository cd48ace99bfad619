//! Drinfel'd currents obtained from quantum minors, and their relations.
//!
//! With `t(I; J)` the quantum minors,
//!
//! ```text
//! e_i(u + (i-2)/2) = t(1..i)^{-1}(u) t(1..i-1,i; 1..i-1,i+1)(u)
//! f_i(u + (i-2)/2) = t(1..i-1,i+1; 1..i-1,i)(u) t(1..i)^{-1}(u)
//! h_i(u + (i-2)/2) = t(1..i)^{-1}(u) t(1..i-1)(u) t(1..i+1)(u-1) t(1..i)^{-1}(u-1)
//! ```
//!
//! and the modes are read off from `e_i(u) = sum_k e_i^(k) u^{-k-1}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Element, Ring};
use crate::error::RttError;
use crate::report::VerificationReport;
use crate::scalar::{int, rat, Rational};
use crate::series::AlgebraSeries;
use crate::rtt::Yangian;

/// Simple-root data of `sl_n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CartanData {
    pub n: usize,
}

impl CartanData {
    pub fn new(n: usize) -> Self {
        CartanData { n }
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }

    /// `(alpha_i, alpha_j)`.
    pub fn form(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }

    /// `1 - 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`.
    pub fn serre_count(&self, i: usize, j: usize) -> usize {
        (1 - self.form(i, j)) as usize
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurrentKind {
    E,
    F,
    H,
}

impl fmt::Display for CurrentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurrentKind::E => "e",
            CurrentKind::F => "f",
            CurrentKind::H => "h",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Current {
    pub kind: CurrentKind,
    pub index: usize,
    pub series: AlgebraSeries,
}

fn leading(i: usize) -> Vec<usize> {
    (1..=i).collect()
}

fn leading_with(i: usize, last: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (1..i).collect();
    v.push(last);
    v
}

/// `-(i-2)/2`, the shift that turns the minor expression into the current at `u`.
fn undo_shift(i: usize) -> Rational {
    rat(2 - i as i64, 2)
}

/// The image of `e_i(u)`, `f_i(u)` or `h_i(u)` in the RTT algebra.
pub fn phi(y: &Yangian, kind: CurrentKind, i: usize) -> Result<Current, RttError> {
    if i < 1 || i >= y.n() {
        return Err(RttError::Range(format!("current index {i} for n={}", y.n())));
    }
    let alg = y.algebra();
    let lead_inv = y.minor(&leading(i), &leading(i))?.inverse(alg)?;
    let raw = match kind {
        CurrentKind::E => lead_inv.mul(alg, &y.minor(&leading(i), &leading_with(i, i + 1))?),
        CurrentKind::F => y.minor(&leading_with(i, i + 1), &leading(i))?.mul(alg, &lead_inv),
        CurrentKind::H => {
            let below = y.minor(&leading(i - 1), &leading(i - 1))?;
            let above = y.minor(&leading(i + 1), &leading(i + 1))?.shift(&int(-1));
            let lead_prev_inv = lead_inv.shift(&int(-1));
            lead_inv.mul(alg, &below).mul(alg, &above).mul(alg, &lead_prev_inv)
        }
    };
    Ok(Current {
        kind,
        index: i,
        series: raw.shift(&undo_shift(i)),
    })
}

/// All currents `e_i, f_i, h_i` for `1 <= i <= n-1`.
#[derive(Clone, Debug)]
pub struct Currents {
    pub e: Vec<AlgebraSeries>,
    pub f: Vec<AlgebraSeries>,
    pub h: Vec<AlgebraSeries>,
}

impl Currents {
    pub fn new(y: &Yangian) -> Result<Self, RttError> {
        let collect = |kind| -> Result<Vec<AlgebraSeries>, RttError> {
            (1..y.n()).map(|i| phi(y, kind, i).map(|c| c.series)).collect()
        };
        Ok(Currents {
            e: collect(CurrentKind::E)?,
            f: collect(CurrentKind::F)?,
            h: collect(CurrentKind::H)?,
        })
    }

    pub fn series(&self, kind: CurrentKind, i: usize) -> &AlgebraSeries {
        match kind {
            CurrentKind::E => &self.e[i - 1],
            CurrentKind::F => &self.f[i - 1],
            CurrentKind::H => &self.h[i - 1],
        }
    }

    /// `x_i^{(k)}`, the coefficient of `u^{-k-1}`.
    pub fn mode(&self, kind: CurrentKind, i: usize, k: usize) -> Element {
        self.series(kind, i).coeff(k + 1)
    }
}

/// The three expressions for `h_i(u)`: the defining product and the two
/// forms subtracting `f e` with the shift on either factor.
pub fn h_variants(y: &Yangian, i: usize) -> Result<[AlgebraSeries; 3], RttError> {
    let alg = y.algebra();
    let base = phi(y, CurrentKind::H, i)?.series;
    let e = phi(y, CurrentKind::E, i)?.series;
    let f = phi(y, CurrentKind::F, i)?.series;
    let lead_inv = y.minor(&leading(i), &leading(i))?.inverse(alg)?;
    let swapped = leading_with(i, i + 1);
    let side = y.minor(&swapped, &swapped)?;
    let half = |c: i64| rat(c, 2);
    let i2 = i as i64;

    // f_i(u + i/2) e_i(u + (i-2)/2)
    let fe_a = f.shift(&half(i2)).mul(alg, &e.shift(&half(i2 - 2)));
    let a = lead_inv.mul(alg, &side).sub(&fe_a).shift(&undo_shift(i));
    // f_i(u + (i-2)/2) e_i(u + i/2)
    let fe_b = f.shift(&half(i2 - 2)).mul(alg, &e.shift(&half(i2)));
    let b = side.mul(alg, &lead_inv).sub(&fe_b).shift(&undo_shift(i));
    Ok([base, a, b])
}

/// Checks every defining relation of the Drinfel'd presentation whose
/// mode content lies within the truncation degree.
pub fn check_drinfeld_relations(y: &Yangian) -> Result<VerificationReport, RttError> {
    let cur = Currents::new(y)?;
    let alg = y.algebra();
    let cartan = CartanData::new(y.n());
    let order = y.order();
    let rank = cartan.rank();
    let mut report = VerificationReport::new("drinfeld-relations")
        .with_param("n", y.n())
        .with_param("order", order)
        .with_param("mode", y.mode().to_string());
    use CurrentKind::{E, F, H};
    let m = |kind, i, k| cur.mode(kind, i, k);
    let half = rat(1, 2);

    for i in 1..=rank {
        let c = cur.series(H, i).constant().clone();
        if c != int(1) || !cur.series(E, i).constant().eq(&int(0)) || !cur.series(F, i).constant().eq(&int(0)) {
            report.fail();
            report.note(format!("constant terms of currents with index {i} are wrong"));
        }
    }

    for i in 1..=rank {
        for j in 1..=rank {
            let a = int(cartan.form(i, j));
            // exact when k + l + 1 <= N
            for k in 0..order {
                for l in 0..order - k {
                    let hh = alg.commutator(&m(H, i, k), &m(H, j, l));
                    report.check_zero(&format!("[h{i}^({k}),h{j}^({l})]"), k + l + 1, &hh);
                    let ef = alg.commutator(&m(E, i, k), &m(F, j, l));
                    let want = if i == j { m(H, i, k + l) } else { Element::zero() };
                    report.check_eq(&format!("[e{i}^({k}),f{j}^({l})]"), k + l + 1, &ef, &want);
                }
            }
            for l in 0..order {
                let he = alg.commutator(&m(H, i, 0), &m(E, j, l));
                report.check_eq(&format!("[h{i}^(0),e{j}^({l})]"), l + 1, &he, &m(E, j, l).scale(&a));
                let hf = alg.commutator(&m(H, i, 0), &m(F, j, l));
                report.check_eq(&format!("[h{i}^(0),f{j}^({l})]"), l + 1, &hf, &-m(F, j, l).scale(&a));
            }
            // exact when k + l + 2 <= N
            let coef = &a * &half;
            for k in 0..order.saturating_sub(1) {
                for l in 0..order - 1 - k {
                    for (x, sign, name) in [(E, 1, "h-e"), (F, -1, "h-f")] {
                        let lhs = &alg.commutator(&m(H, i, k + 1), &m(x, j, l)) - &alg.commutator(&m(H, i, k), &m(x, j, l + 1));
                        let sym = &alg.mul(&m(H, i, k), &m(x, j, l)) + &alg.mul(&m(x, j, l), &m(H, i, k));
                        let rhs = sym.scale(&(&coef * int(sign)));
                        report.check_eq(&format!("{name} recursion i={i} j={j} k={k} l={l}"), k + l + 2, &lhs, &rhs);
                    }
                    for (x, sign, name) in [(E, 1, "e-e"), (F, -1, "f-f")] {
                        let lhs = &alg.commutator(&m(x, i, k + 1), &m(x, j, l)) - &alg.commutator(&m(x, i, k), &m(x, j, l + 1));
                        let sym = &alg.mul(&m(x, i, k), &m(x, j, l)) + &alg.mul(&m(x, j, l), &m(x, i, k));
                        let rhs = sym.scale(&(&coef * int(sign)));
                        report.check_eq(&format!("{name} recursion i={i} j={j} k={k} l={l}"), k + l + 2, &lhs, &rhs);
                    }
                }
            }
            if i != j {
                for x in [E, F] {
                    check_serre(&mut report, alg, &cur, cartan, x, i, j, order);
                }
            }
        }
    }
    Ok(report)
}

fn check_serre(
    report: &mut VerificationReport,
    alg: &crate::algebra::Algebra,
    cur: &Currents,
    cartan: CartanData,
    kind: CurrentKind,
    i: usize,
    j: usize,
    order: usize,
) {
    let m = |i, k| cur.mode(kind, i, k);
    match cartan.serre_count(i, j) {
        1 => {
            for k in 0..order {
                for l in 0..order - k {
                    let c = alg.commutator(&m(i, k), &m(j, l));
                    report.check_zero(&format!("serre {kind}{i}^({k}) {kind}{j}^({l})"), k + l + 1, &c);
                }
            }
        }
        2 => {
            // sum over both orderings of (k1, k2); exact when k1 + k2 + l + 1 <= N
            for k1 in 0..order {
                for k2 in 0..order - k1 {
                    for l in 0..order - k1 - k2 {
                        let inner = |a: usize, b: usize| alg.commutator(&m(i, a), &alg.commutator(&m(i, b), &m(j, l)));
                        let total = &inner(k1, k2) + &inner(k2, k1);
                        report.check_zero(&format!("serre {kind}{i}^({k1},{k2}) {kind}{j}^({l})"), k1 + k2 + l + 1, &total);
                    }
                }
            }
        }
        _ => unreachable!("sl_n has no other Serre exponents"),
    }
}

/// Degree-zero root vector `e_{ij}^(0)` (for `i < j`, as nested commutators
/// `[..[[e_{j-1}, e_{j-2}], e_{j-3}].., e_i]`) or `f_{ij}^(0)` (for `i > j`,
/// as `[f_j, [f_{j+1}, [.., [f_{i-2}, f_{i-1}]..]]]`).
pub fn root_vector(y: &Yangian, i: usize, j: usize) -> Result<Element, RttError> {
    let n = y.n();
    if i == j || i < 1 || j < 1 || i > n || j > n {
        return Err(RttError::Range(format!("root vector ({i}, {j}) for n={n}")));
    }
    let cur = Currents::new(y)?;
    let alg = y.algebra();
    if i < j {
        let mut acc = cur.mode(CurrentKind::E, j - 1, 0);
        for a in (i..j - 1).rev() {
            acc = alg.commutator(&acc, &cur.mode(CurrentKind::E, a, 0));
        }
        Ok(acc)
    } else {
        let (lo, hi) = (j, i);
        let mut acc = cur.mode(CurrentKind::F, hi - 1, 0);
        for a in (lo..hi - 1).rev() {
            acc = alg.commutator(&cur.mode(CurrentKind::F, a, 0), &acc);
        }
        Ok(acc)
    }
}

/// Chevalley-Serre relations of `sl_n` on the degree-zero modes.
pub fn embedding_check(y: &Yangian) -> Result<VerificationReport, RttError> {
    let cur = Currents::new(y)?;
    let alg = y.algebra();
    let cartan = CartanData::new(y.n());
    let mut report = VerificationReport::new("sl-embedding").with_param("n", y.n());
    use CurrentKind::{E, F, H};
    let m = |kind, i| cur.mode(kind, i, 0);
    for i in 1..=cartan.rank() {
        for j in 1..=cartan.rank() {
            let a = int(cartan.form(i, j));
            let want = if i == j { m(H, i) } else { Element::zero() };
            report.check_eq(&format!("[e{i},f{j}]"), 1, &alg.commutator(&m(E, i), &m(F, j)), &want);
            report.check_zero(&format!("[h{i},h{j}]"), 1, &alg.commutator(&m(H, i), &m(H, j)));
            report.check_eq(&format!("[h{i},e{j}]"), 1, &alg.commutator(&m(H, i), &m(E, j)), &m(E, j).scale(&a));
            report.check_eq(&format!("[h{i},f{j}]"), 1, &alg.commutator(&m(H, i), &m(F, j)), &-m(F, j).scale(&a));
            if i != j {
                for x in [E, F] {
                    let mut acc = m(x, j);
                    for _ in 0..cartan.serre_count(i, j) {
                        acc = alg.commutator(&m(x, i), &acc);
                    }
                    report.check_zero(&format!("serre {x}{i} {x}{j}"), 1, &acc);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuotientMode;

    fn sl(n: usize, order: u32) -> Yangian {
        Yangian::new(n, order, QuotientMode::Sl).unwrap()
    }

    #[test]
    fn phi_leading_terms_n2() {
        let y = sl(2, 2);
        assert_eq!(phi(&y, CurrentKind::E, 1).unwrap().series.coeff(1), y.generator(1, 2, 1));
        assert_eq!(phi(&y, CurrentKind::F, 1).unwrap().series.coeff(1), y.generator(2, 1, 1));
        let h = phi(&y, CurrentKind::H, 1).unwrap().series;
        assert_eq!(h.coeff(1), y.generator(1, 1, 1).scale(&int(-2)));
        assert_eq!(*h.constant(), int(1));
        assert!(phi(&y, CurrentKind::E, 2).is_err());
    }

    #[test]
    fn cartan_data() {
        let c = CartanData::new(4);
        assert_eq!(c.form(1, 1), 2);
        assert_eq!(c.form(2, 3), -1);
        assert_eq!(c.form(1, 3), 0);
        assert_eq!(c.serre_count(1, 2), 2);
        assert_eq!(c.serre_count(1, 3), 1);
    }

    #[test]
    fn degree_zero_relations() {
        let y = sl(2, 2);
        let cur = Currents::new(&y).unwrap();
        let alg = y.algebra();
        let (e, f, h) = (
            cur.mode(CurrentKind::E, 1, 0),
            cur.mode(CurrentKind::F, 1, 0),
            cur.mode(CurrentKind::H, 1, 0),
        );
        assert_eq!(alg.commutator(&e, &f), h);
        assert_eq!(alg.commutator(&h, &e), e.scale(&int(2)));
    }

    #[test]
    fn h_variants_agree() {
        for (n, order) in [(2, 3), (3, 2)] {
            let y = sl(n, order);
            for i in 1..n {
                let [a, b, c] = h_variants(&y, i).unwrap();
                assert_eq!(a, b, "n={n} i={i}");
                assert_eq!(a, c, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn relations_hold() {
        let r = check_drinfeld_relations(&sl(2, 4)).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.checks > 40);
        let r = check_drinfeld_relations(&sl(3, 3)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn root_vectors_are_rtt_generators() {
        for n in [2, 3] {
            let y = sl(n, 1);
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        assert_eq!(root_vector(&y, i, j).unwrap(), y.generator(i, j, 1), "({i},{j})");
                    }
                }
            }
            assert!(embedding_check(&y).unwrap().passed());
        }
    }
}
