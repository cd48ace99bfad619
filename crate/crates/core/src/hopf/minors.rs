//! Coproduct, antipode and counit of quantum minors, and the second route to
//! the pulled-back maps on currents built from them.

use serde::Serialize;

use crate::algebra::Word;
use crate::drinfeld::CurrentKind;
use crate::error::RttError;
use crate::report::VerificationReport;
use crate::rtt::Yangian;
use crate::scalar::{int, rat, Rational};
use crate::series::{tensor_series, AlgebraSeries, SeriesMatrix, TensorSeries};

use super::{HopfContext, RttHopf};

fn combinations(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for c in start..=n {
            cur.push(c);
            go(c + 1, n, m, cur, out);
            cur.pop();
        }
    }
    go(1, n, m, &mut cur, &mut out);
    out
}

/// `Delta t(a; b)(u) = sum_c t(a; c)(u) ⊗ t(c; b)(u)`.
pub fn delta_minor(y: &Yangian, rows: &[usize], cols: &[usize]) -> Result<TensorSeries, RttError> {
    let mut acc = TensorSeries::zero(y.order());
    for c in combinations(y.n(), rows.len()) {
        acc = acc.add(&tensor_series(&y.minor(rows, &c)?, &y.minor(&c, cols)?));
    }
    Ok(acc)
}

/// `eps t(a; b) = prod delta_{a_k b_k}`.
pub fn counit_minor(rows: &[usize], cols: &[usize]) -> Rational {
    if rows == cols {
        int(1)
    } else {
        int(0)
    }
}

/// `t*(a; b)(-u-m+1)`, the unsigned antipode image of `t(a; b)(u)`.
pub fn starred_minor(y: &Yangian, star: &SeriesMatrix<Word>, rows: &[usize], cols: &[usize]) -> AlgebraSeries {
    let m = rows.len() as i64;
    y.star_minor(star, rows, cols).negate_variable().shift(&int(m - 1))
}

/// Sign relating the anti-multiplicative antipode of size-`m` minors to the
/// starred minor, found by comparing every key of that size.
#[derive(Clone, Debug, Serialize)]
pub struct AntipodeSign {
    pub size: usize,
    /// `None` when neither sign works for every key.
    pub sign: Option<i64>,
    pub keys_checked: usize,
}

pub fn antipode_sign(maps: &RttHopf<'_>, star: &SeriesMatrix<Word>, m: usize) -> Result<AntipodeSign, RttError> {
    let y = maps.yangian();
    let mut plus = true;
    let mut minus = true;
    let mut keys = 0;
    for rows in combinations(y.n(), m) {
        for cols in combinations(y.n(), m) {
            let direct = maps.antipode_series(&y.minor(&rows, &cols)?);
            let starred = starred_minor(y, star, &rows, &cols);
            plus &= direct == starred;
            minus &= direct == starred.neg();
            keys += 1;
        }
    }
    let sign = match (plus, minus) {
        (true, _) => Some(1),
        (false, true) => Some(-1),
        _ => None,
    };
    Ok(AntipodeSign { size: m, sign, keys_checked: keys })
}

/// Checks the minor coproduct and counit against the multiplicative
/// extension, `Delta(qdet) = qdet ⊗ qdet`, and determines the antipode sign
/// for every minor size.
pub fn minor_hopf_check(maps: &RttHopf<'_>) -> Result<(VerificationReport, Vec<AntipodeSign>), RttError> {
    let y = maps.yangian();
    let n = y.n();
    let mut r = VerificationReport::new("minor Hopf images")
        .with_param("n", n)
        .with_param("order", y.order());
    for m in 1..=n {
        for rows in combinations(n, m) {
            for cols in combinations(n, m) {
                let minor = y.minor(&rows, &cols)?;
                let label = format!("{rows:?};{cols:?}");
                r.check_series(&format!("Delta {label}"), &delta_minor(y, &rows, &cols)?, &maps.delta_series(&minor), y.order());
                let eps = maps.counit_series(&minor);
                r.check_series(
                    &format!("eps {label}"),
                    &eps,
                    &AlgebraSeries::scalar(counit_minor(&rows, &cols), y.order()),
                    y.order(),
                );
            }
        }
    }
    let qdet = y.qdet();
    let all: Vec<usize> = (1..=n).collect();
    r.check_series("Delta qdet", &delta_minor(y, &all, &all)?, &tensor_series(&qdet, &qdet), y.order());
    let star = y.t_star();
    let mut signs = Vec::new();
    for m in 1..=n {
        let s = antipode_sign(maps, &star, m)?;
        match s.sign {
            Some(v) => r.note(format!("antipode sign for {m}x{m} minors: {v:+} ({} keys)", s.keys_checked)),
            None => {
                r.fail();
                r.note(format!("no uniform antipode sign for {m}x{m} minors"));
            }
        }
        signs.push(s);
    }
    Ok((r, signs))
}

fn leading(i: usize) -> Vec<usize> {
    (1..=i).collect()
}

fn leading_with(i: usize, last: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (1..i).collect();
    v.push(last);
    v
}

impl HopfContext<'_> {
    /// `Delta(x_i(u))` from the minor coproduct and tensor-series inversion,
    /// independent of [`HopfContext::pullback_delta`].
    pub fn pullback_delta_via_minors(&self, kind: CurrentKind, i: usize) -> Result<TensorSeries, RttError> {
        let y = self.yangian();
        let tr = self.tensor_ring();
        let lead = leading(i);
        let lead_inv = delta_minor(y, &lead, &lead)?.inverse(&tr)?;
        let raw = match kind {
            CurrentKind::E => lead_inv.mul(&tr, &delta_minor(y, &lead, &leading_with(i, i + 1))?),
            CurrentKind::F => delta_minor(y, &leading_with(i, i + 1), &lead)?.mul(&tr, &lead_inv),
            CurrentKind::H => {
                let below = delta_minor(y, &leading(i - 1), &leading(i - 1))?;
                let above = delta_minor(y, &leading(i + 1), &leading(i + 1))?.shift(&int(-1));
                lead_inv
                    .mul(&tr, &below)
                    .mul(&tr, &above)
                    .mul(&tr, &lead_inv.shift(&int(-1)))
            }
        };
        Ok(raw.shift(&rat(2 - i as i64, 2)))
    }

    /// `S(x_i(u))` from the starred minors (with the empirically determined
    /// signs) and series inversion.
    pub fn pullback_antipode_via_minors(&self, kind: CurrentKind, i: usize, signs: &[AntipodeSign]) -> Result<AlgebraSeries, RttError> {
        let y = self.yangian();
        let alg = y.algebra();
        let star = y.t_star();
        let s_minor = |rows: &[usize], cols: &[usize]| -> Result<AlgebraSeries, RttError> {
            if rows.is_empty() {
                return Ok(AlgebraSeries::one(y.order()));
            }
            let sign = signs[rows.len() - 1]
                .sign
                .ok_or_else(|| RttError::InvalidMinor(format!("no antipode sign for size {}", rows.len())))?;
            Ok(starred_minor(y, &star, rows, cols).scale(&int(sign)))
        };
        let lead = leading(i);
        let s_lead_inv = s_minor(&lead, &lead)?.inverse(alg)?;
        // S reverses products
        let raw = match kind {
            CurrentKind::E => s_minor(&lead, &leading_with(i, i + 1))?.mul(alg, &s_lead_inv),
            CurrentKind::F => s_lead_inv.mul(alg, &s_minor(&leading_with(i, i + 1), &lead)?),
            CurrentKind::H => {
                let below = s_minor(&leading(i - 1), &leading(i - 1))?;
                let above = s_minor(&leading(i + 1), &leading(i + 1))?.shift(&int(-1));
                s_lead_inv
                    .shift(&int(-1))
                    .mul(alg, &above)
                    .mul(alg, &below)
                    .mul(alg, &s_lead_inv)
            }
        };
        Ok(raw.shift(&rat(2 - i as i64, 2)))
    }
}

/// Both routes for every current: coefficientwise maps vs minors.
pub fn pullback_routes_agree(ctx: &HopfContext<'_>, signs: &[AntipodeSign]) -> Result<VerificationReport, RttError> {
    let order = ctx.order();
    let mut r = VerificationReport::new("pullback routes")
        .with_param("n", ctx.n())
        .with_param("order", order);
    for i in 1..ctx.n() {
        for kind in [CurrentKind::E, CurrentKind::F, CurrentKind::H] {
            let label = format!("{kind}{i}");
            r.check_series(
                &format!("Delta {label}"),
                &ctx.pullback_delta(kind, i),
                &ctx.pullback_delta_via_minors(kind, i)?,
                order,
            );
            r.check_series(
                &format!("S {label}"),
                &ctx.pullback_antipode(kind, i),
                &ctx.pullback_antipode_via_minors(kind, i, signs)?,
                order,
            );
        }
    }
    Ok(r)
}
