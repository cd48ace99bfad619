//! The minor-ratio identities behind the coproduct and antipode formulas:
//! leading-minor quotients written as adjoint actions on currents.

use serde::Serialize;

use crate::drinfeld::CurrentKind;
use crate::error::RttError;
use crate::report::VerificationReport;
use crate::scalar::{int, rat, Rational};
use crate::series::AlgebraSeries;

use super::adjoint::HatArgs;
use super::{admissible_tuples, search_repairs, GForm, HopfContext, Placement, Side};

fn leading(i: usize) -> Vec<usize> {
    (1..=i).collect()
}

fn leading_with(i: usize, last: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (1..i).collect();
    v.push(last);
    v
}

/// Minor quotients: leading minor inverse on the left or on the right.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Quotient {
    InverseLeft,
    InverseRight,
}

/// One identity together with its failure analysis.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    pub first_failing_degree: Option<usize>,
    pub repairs: Vec<String>,
}

/// Shape of an operator-side expression.
#[derive(Clone, Copy, Debug)]
enum Arg {
    E,
    F,
    G(GForm),
}

impl HopfContext<'_> {
    fn quotient(&self, q: Quotient, lead: &[usize], rows: &[usize], cols: &[usize]) -> Result<AlgebraSeries, RttError> {
        let y = self.yangian();
        let alg = y.algebra();
        let inv = y.minor(lead, lead)?.inverse(alg)?;
        let m = y.minor(rows, cols)?;
        Ok(match q {
            Quotient::InverseLeft => inv.mul(alg, &m),
            Quotient::InverseRight => m.mul(alg, &inv),
        })
    }

    fn arg_series(&self, arg: Arg, i: usize, p: &Placement, printed: Rational) -> AlgebraSeries {
        let c = p.at("arg", printed);
        match arg {
            Arg::E => self.current(CurrentKind::E, i, &c),
            Arg::F => self.current(CurrentKind::F, i, &c),
            Arg::G(form) => self.g(p.g("g", form), i, &c),
        }
    }

    fn identity_check(
        &self,
        name: String,
        lhs: &AlgebraSeries,
        rhs: impl Fn(&Placement) -> AlgebraSeries,
        report: &mut VerificationReport,
    ) -> IdentityCheck {
        let order = self.order();
        let printed = Placement::printed();
        let value = rhs(&printed);
        let ok = report.check_series(&name, &value, lhs, order);
        let mut first = None;
        let mut repairs = Vec::new();
        if !ok {
            first = (1..=order).find(|&k| value.coeff(k) != lhs.coeff(k));
            repairs = search_repairs(&printed, Vec::new(), |p| Ok::<bool, ()>(rhs(p).truncated(order) == lhs.truncated(order)))
                .unwrap_or_default();
            report.note(format!(
                "{name}: first differs at u^-{}; repairs: {}",
                first.unwrap_or(0),
                if repairs.is_empty() { "none".to_string() } else { repairs.join(" | ") }
            ));
        }
        IdentityCheck {
            name,
            passed: ok,
            first_failing_degree: first,
            repairs,
        }
    }

    /// All eight quotient identities for every admissible tuple.
    pub fn check_lemma_quotients(&self) -> Result<(VerificationReport, Vec<IdentityCheck>), RttError> {
        let n = self.n();
        let adj = self.adjoint();
        let mut report = VerificationReport::new("minor quotients as adjoint actions")
            .with_param("n", n)
            .with_param("order", self.order())
            .with_param("gate", serde_json::to_value(self.gate()).expect("gate serializes"));
        let mut out = Vec::new();
        for i in 1..n {
            let lead = leading(i);
            let swapped = leading_with(i, i + 1);
            let lo = rat(i as i64 - 2, 2);
            let hi = rat(i as i64, 2);
            for a in admissible_tuples(n, i) {
                // (name, quotient side, rows, cols, side of the operator, E or F composite, op shift, argument, arg shift)
                let cases: [(&str, Quotient, &[usize], &[usize], Side, bool, &Rational, Arg, &Rational); 8] = [
                    ("X+ left", Quotient::InverseLeft, &lead, &a, Side::Left, true, &lo, Arg::E, &lo),
                    ("X+ right", Quotient::InverseRight, &lead, &a, Side::Right, true, &hi, Arg::E, &hi),
                    ("X- left", Quotient::InverseLeft, &a, &lead, Side::Left, false, &hi, Arg::F, &hi),
                    ("X- right", Quotient::InverseRight, &a, &lead, Side::Right, false, &lo, Arg::F, &lo),
                    ("H+ left", Quotient::InverseLeft, &swapped, &a, Side::Left, true, &lo, Arg::G(GForm::GTilde), &lo),
                    ("H+ right", Quotient::InverseRight, &swapped, &a, Side::Right, true, &hi, Arg::G(GForm::G), &lo),
                    ("H- left", Quotient::InverseLeft, &a, &swapped, Side::Left, false, &hi, Arg::G(GForm::GTilde), &lo),
                    ("H- right", Quotient::InverseRight, &a, &swapped, Side::Right, false, &lo, Arg::G(GForm::G), &lo),
                ];
                for (label, q, rows, cols, side, is_e, op_shift, arg, arg_shift) in cases {
                    let lhs = self.quotient(q, &lead, rows, cols)?;
                    let rhs = |p: &Placement| {
                        let x = self.arg_series(arg, i, p, arg_shift.clone());
                        let c = p.at("op", op_shift.clone());
                        if is_e {
                            adj.big_e(side, i, &a, &c, &x)
                        } else {
                            adj.big_f(side, i, &a, &c, &x)
                        }
                    };
                    let name = format!("{label} i={i} a={a:?}");
                    out.push(self.identity_check(name, &lhs, rhs, &mut report));
                }
            }
        }
        Ok((report, out))
    }

    /// The four identities feeding the antipode: ratios of principal minors
    /// with index sets `(j, i+2..n)` over `t(1..n-i)`, and the two hatted
    /// operators.
    pub fn check_lemma_antipode(&self) -> Result<(VerificationReport, Vec<IdentityCheck>), RttError> {
        let n = self.n();
        let adj = self.adjoint();
        let mut report = VerificationReport::new("principal minor quotients as adjoint actions")
            .with_param("n", n)
            .with_param("order", self.order())
            .with_param("gate", serde_json::to_value(self.gate()).expect("gate serializes"));
        let mut out = Vec::new();
        for i in 1..n {
            let m = n - i;
            let lead = leading(m);
            let base = rat(m as i64 - 2, 2);
            let tail: Vec<usize> = (i + 2..=n).collect();
            for j in 1..=i + 1 {
                let mut set = vec![j];
                set.extend(&tail);
                for (label, q, side, form) in [
                    ("H right", Quotient::InverseRight, Side::Right, GForm::G),
                    ("H left", Quotient::InverseLeft, Side::Left, GForm::GTilde),
                ] {
                    let lhs = self.quotient(q, &lead, &set, &set)?;
                    let rhs = |p: &Placement| {
                        let x = self.arg_series(Arg::G(form), m, p, base.clone());
                        adj.big_h(side, m, &set, &p.at("op", base.clone()), &x)
                    };
                    out.push(self.identity_check(format!("{label} i={i} j={j}"), &lhs, rhs, &mut report));
                }
            }
            let mut rows_e = vec![i];
            rows_e.extend(&tail);
            let mut cols_e = vec![i + 1];
            cols_e.extend(&tail);
            let lhs = self.quotient(Quotient::InverseRight, &lead, &rows_e, &cols_e)?;
            let rhs = |p: &Placement| {
                let x = self.arg_series(Arg::E, m, p, base.clone() + int(1));
                let args = HatArgs::e_hat(&base);
                let args = HatArgs {
                    e: p.at("op.E", args.e),
                    f: p.at("op.F", args.f),
                    h: p.at("op.H", args.h),
                };
                adj.e_hat(m, &args, &x)
            };
            out.push(self.identity_check(format!("E hat i={i}"), &lhs, rhs, &mut report));
            let lhs = self.quotient(Quotient::InverseLeft, &lead, &cols_e, &rows_e)?;
            let rhs = |p: &Placement| {
                let x = self.arg_series(Arg::F, m, p, base.clone() + int(1));
                let args = HatArgs::f_hat(m, &base);
                let args = HatArgs {
                    e: p.at("op.E", args.e),
                    f: p.at("op.F", args.f),
                    h: p.at("op.H", args.h),
                };
                adj.f_hat(m, &args, &x)
            };
            out.push(self.identity_check(format!("F hat i={i}"), &lhs, rhs, &mut report));
        }
        Ok((report, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuotientMode;
    use crate::rtt::Yangian;

    #[test]
    fn sl2_quotients() {
        let y = Yangian::new(2, 2, QuotientMode::Sl).unwrap();
        let ctx = HopfContext::new(&y).unwrap();
        let (r, _) = ctx.check_lemma_quotients().unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn sl3_quotients_and_principal_ratios() {
        let y = Yangian::new(3, 2, QuotientMode::Sl).unwrap();
        let ctx = HopfContext::new(&y).unwrap();
        let (r, checks) = ctx.check_lemma_quotients().unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(checks.len(), 32);
        let (r, checks) = ctx.check_lemma_antipode().unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(checks.len(), 14);
    }

    #[test]
    fn f_hat_correction_shift_at_order_3() {
        let y = Yangian::new(3, 3, QuotientMode::Sl).unwrap();
        let ctx = HopfContext::new(&y).unwrap();
        let (_, checks) = ctx.check_lemma_antipode().unwrap();
        let failing: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert_eq!(failing.len(), 1);
        assert_eq!(failing[0].name, "F hat i=1");
        assert_eq!(failing[0].first_failing_degree, Some(3));
        assert_eq!(failing[0].repairs, vec!["op.E-1".to_string()]);
    }

    #[test]
    fn narrow_gate_breaks_the_quotients() {
        let y = Yangian::new(4, 2, QuotientMode::Sl).unwrap();
        let full = HopfContext::new(&y).unwrap();
        assert!(full.check_lemma_quotients().unwrap().0.passed());
        let narrow = HopfContext::with_gate(&y, crate::hopf::Gate::Narrow).unwrap();
        assert!(!narrow.check_lemma_quotients().unwrap().0.passed());
    }
}
