//! Hopf axioms for the pulled-back structure, checked coefficientwise on the
//! currents and on `T_ij(u)`.

use crate::algebra::{tensor_product, Element, TensorElement};
use crate::drinfeld::CurrentKind;
use crate::error::RttError;
use crate::report::VerificationReport;

use super::maps::flip;
use super::HopfContext;

fn axioms_on(ctx: &HopfContext<'_>, label: &str, x: &Element, r: &mut VerificationReport, degree: usize) {
    let maps = ctx.maps();
    let (l, rr) = maps.coassociativity_sides(x);
    r.check_eq(&format!("coassociativity {label}"), degree, &l, &rr);
    let (l, rr) = maps.counit_sides(x);
    r.check_eq(&format!("(eps ⊗ id) Delta {label}"), degree, &l, x);
    r.check_eq(&format!("(id ⊗ eps) Delta {label}"), degree, &rr, x);
    let eps = maps.counit(x);
    let (l, rr) = maps.antipode_sides(x);
    r.check_eq(&format!("m(S ⊗ id) Delta {label}"), degree, &l, &eps);
    r.check_eq(&format!("m(id ⊗ S) Delta {label}"), degree, &rr, &eps);
}

/// Coassociativity, counit and antipode axioms on every coefficient of
/// `e_i(u)`, `f_i(u)`, `h_i(u)` and `T_ij(u)` up to the working order.
pub fn verify_hopf_axioms(ctx: &HopfContext<'_>) -> VerificationReport {
    let n = ctx.n();
    let order = ctx.order();
    let mut top = VerificationReport::new("Hopf axioms")
        .with_param("n", n)
        .with_param("order", order);
    let mut cur = VerificationReport::new("currents");
    for i in 1..n {
        for kind in [CurrentKind::E, CurrentKind::F, CurrentKind::H] {
            let s = ctx.currents().series(kind, i);
            for k in 1..=order {
                axioms_on(ctx, &format!("{kind}{i} u^-{k}"), &s.coeff(k), &mut cur, k);
            }
        }
    }
    let mut t = VerificationReport::new("T(u)");
    let y = ctx.yangian();
    for i in 1..=n {
        for j in 1..=n {
            let s = y.entry(i, j);
            for k in 1..=order {
                axioms_on(ctx, &format!("T{i}{j} u^-{k}"), &s.coeff(k), &mut t, k);
            }
        }
    }
    top.push_child(cur);
    top.push_child(t);
    top
}

/// `flip(Delta(e^(1)))` differs from `Delta(e^(1))` and equals the opposite
/// form `e^(1) ⊗ 1 + 1 ⊗ e^(1) + h^(0) ⊗ e^(0)` (for `n = 2`, `i = 1`).
pub fn cocommutativity_check(ctx: &HopfContext<'_>) -> Result<VerificationReport, RttError> {
    if ctx.n() != 2 || ctx.order() < 2 {
        return Err(RttError::Range("needs n = 2 and order >= 2".into()));
    }
    let cur = ctx.currents();
    let e0 = cur.mode(CurrentKind::E, 1, 0);
    let e1 = cur.mode(CurrentKind::E, 1, 1);
    let h0 = cur.mode(CurrentKind::H, 1, 0);
    let one = Element::one();
    let delta = ctx.maps().delta(&e1);
    let flipped = flip(&delta);
    let mut r = VerificationReport::new("non-cocommutativity").with_param("n", 2);
    let diff: TensorElement = &flipped - &delta;
    if diff.is_zero() {
        r.fail();
        r.note("flip(Delta(e^(1))) = Delta(e^(1))");
    } else {
        r.note(format!("flip(Delta(e^(1))) - Delta(e^(1)) has {} terms", diff.len()));
    }
    let want_direct = &(&tensor_product(&e1, &one) + &tensor_product(&one, &e1)) + &tensor_product(&e0, &h0);
    let want_flip = &(&tensor_product(&e1, &one) + &tensor_product(&one, &e1)) + &tensor_product(&h0, &e0);
    r.check_eq("Delta(e^(1))", 2, &delta, &want_direct);
    r.check_eq("flip Delta(e^(1))", 2, &flipped, &want_flip);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuotientMode;
    use crate::rtt::Yangian;

    #[test]
    fn axioms_sl2_order_2() {
        let y = Yangian::new(2, 2, QuotientMode::Sl).unwrap();
        let ctx = HopfContext::new(&y).unwrap();
        let r = verify_hopf_axioms(&ctx);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn opposite_coproduct() {
        let y = Yangian::new(2, 2, QuotientMode::Sl).unwrap();
        let ctx = HopfContext::new(&y).unwrap();
        let r = cocommutativity_check(&ctx).unwrap();
        assert!(r.passed(), "{r}");
    }
}
