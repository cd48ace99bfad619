//! The explicit `sl_2` and `sl_3` forms of the coproduct, antipode and
//! counit, with the same slot mechanism as the general formulas so that
//! failures come with a repair and the harness can be mutated.

use serde::Serialize;

use crate::algebra::Ring;
use crate::drinfeld::CurrentKind;
use crate::error::RttError;
use crate::scalar::{int, Rational};
use crate::serialize::RenderKey;
use crate::series::{tensor_series, AlgebraSeries, Series, TensorSeries};

use super::{compare, search_repairs, GForm, HopfContext, HopfReport, Placement};

const E: CurrentKind = CurrentKind::E;
const F: CurrentKind = CurrentKind::F;
const H: CurrentKind = CurrentKind::H;

fn zero() -> Rational {
    int(0)
}

fn one() -> Rational {
    int(1)
}

/// One closed form against the pullback.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedCheck {
    pub name: String,
    pub passed: bool,
    pub first_failing_degree: Option<usize>,
    /// Readings within one or two slot changes that agree with the pullback.
    pub repairs: Vec<String>,
    pub report: HopfReport,
}

impl ClosedCheck {
    pub fn summary(&self) -> String {
        if self.passed {
            return format!("{}: matches the pullback", self.name);
        }
        let deg = self.first_failing_degree.map_or("?".into(), |d| d.to_string());
        let fix = if self.repairs.is_empty() {
            "no repair within two slot changes".to_string()
        } else {
            format!("repaired by: {}", self.repairs.join(" | "))
        };
        format!("{}: differs first at u^-{deg}; {fix}", self.name)
    }
}

/// A perturbed reading and the degree where it first departs from the
/// pullback (`None` means the mutation went unnoticed).
#[derive(Clone, Debug, Serialize)]
pub struct Mutation {
    pub variant: String,
    pub first_failing_degree: Option<usize>,
}

/// The `sl_2` displays.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sl2Form {
    /// `Delta(e)`: geometric series in `e(u) ⊗ f(u+1)` times `1 ⊗ e + e ⊗ g~`.
    DeltaEProduct,
    /// `Delta(e) = 1 ⊗ e(u) + sum (-1)^m e(u)^{m+1} ⊗ f(u+1)^m h(u)`.
    DeltaEPowers,
    DeltaFProduct,
    /// `Delta(f) = f(u) ⊗ 1 + sum (-1)^m h(u) e(u+1)^m ⊗ f(u)^{m+1}`.
    DeltaFPowers,
    DeltaHProduct,
    /// `Delta(h) = sum (-1)^k (k+1) h(u) e(u+1)^k ⊗ f(u+1)^k h(u)`.
    DeltaHPowers,
    AntipodeE,
    AntipodeF,
    AntipodeH,
}

impl Sl2Form {
    pub const ALL: [Sl2Form; 9] = [
        Sl2Form::DeltaEProduct,
        Sl2Form::DeltaEPowers,
        Sl2Form::DeltaFProduct,
        Sl2Form::DeltaFPowers,
        Sl2Form::DeltaHProduct,
        Sl2Form::DeltaHPowers,
        Sl2Form::AntipodeE,
        Sl2Form::AntipodeF,
        Sl2Form::AntipodeH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sl2Form::DeltaEProduct => "sl2 Delta(e(u)) product form",
            Sl2Form::DeltaEPowers => "sl2 Delta(e(u)) power form",
            Sl2Form::DeltaFProduct => "sl2 Delta(f(u)) product form",
            Sl2Form::DeltaFPowers => "sl2 Delta(f(u)) power form",
            Sl2Form::DeltaHProduct => "sl2 Delta(h(u)) product form",
            Sl2Form::DeltaHPowers => "sl2 Delta(h(u)) power form",
            Sl2Form::AntipodeE => "sl2 S(e(u+1))",
            Sl2Form::AntipodeF => "sl2 S(f(u+1))",
            Sl2Form::AntipodeH => "sl2 S(h(u+1))",
        }
    }

    fn kind(self) -> CurrentKind {
        match self {
            Sl2Form::DeltaEProduct | Sl2Form::DeltaEPowers | Sl2Form::AntipodeE => E,
            Sl2Form::DeltaFProduct | Sl2Form::DeltaFPowers | Sl2Form::AntipodeF => F,
            _ => H,
        }
    }

    fn is_delta(self) -> bool {
        !matches!(self, Sl2Form::AntipodeE | Sl2Form::AntipodeF | Sl2Form::AntipodeH)
    }
}

fn require_n(ctx: &HopfContext<'_>, n: usize) -> Result<(), RttError> {
    if ctx.n() == n {
        Ok(())
    } else {
        Err(RttError::Range(format!("these closed forms need n = {n}, got n = {}", ctx.n())))
    }
}

impl HopfContext<'_> {
    fn check_closed<K: RenderKey>(
        &self,
        name: &str,
        truth: &Series<K>,
        eval: impl Fn(&Placement) -> Result<Series<K>, RttError>,
    ) -> Result<ClosedCheck, RttError> {
        let order = self.order();
        let printed = Placement::printed();
        let report = compare(name, &eval(&printed)?, truth, order);
        let passed = report.passed();
        let first = report.report.first_failing_degree();
        let repairs = if passed {
            Vec::new()
        } else {
            let want = truth.truncated(order);
            search_repairs(&printed, Vec::new(), |p| Ok::<bool, RttError>(eval(p)?.truncated(order) == want))?
        };
        Ok(ClosedCheck {
            name: name.to_string(),
            passed,
            first_failing_degree: first,
            repairs,
            report,
        })
    }

    /// Evaluates one `sl_2` coproduct display under a placement.
    pub fn sl2_delta(&self, form: Sl2Form, p: &Placement) -> Result<TensorSeries, RttError> {
        require_n(self, 2)?;
        let x = |kind, slot: &str, c: Rational| self.x(kind, 1, p, slot, c);
        let gx = |slot: &str, form, c: Rational| self.gx(1, p, slot, form, c);
        let ones = AlgebraSeries::one(self.order());
        let t = tensor_series;
        Ok(match form {
            Sl2Form::DeltaEProduct => {
                let ratio = t(&x(E, "X.e", zero()), &x(F, "X.f", one()));
                let tail = t(&ones, &x(E, "Y.1e", zero())).add(&t(&x(E, "Y.e", zero()), &gx("Y.g", GForm::GTilde, zero())));
                self.tensor_mul(&self.tensor_geometric(&ratio), &tail)
            }
            Sl2Form::DeltaEPowers => {
                let e = x(E, "e", zero());
                let ratio = t(&e, &x(F, "f", one()));
                let sum = self.tensor_mul(&self.tensor_geometric(&ratio), &t(&e, &x(H, "h", zero())));
                t(&ones, &x(E, "1e", zero())).add(&sum)
            }
            Sl2Form::DeltaFProduct => {
                let head = t(&x(F, "A.1f", zero()), &ones).add(&t(&gx("A.g", GForm::GTilde, zero()), &x(F, "A.f", zero())));
                let ratio = t(&x(E, "B.e", one()), &x(F, "B.f", zero()));
                self.tensor_mul(&head, &self.tensor_geometric(&ratio))
            }
            Sl2Form::DeltaFPowers => {
                let f = x(F, "f", zero());
                let ratio = t(&x(E, "e", one()), &f);
                let sum = self.tensor_mul(&t(&x(H, "h", zero()), &f), &self.tensor_geometric(&ratio));
                t(&x(F, "1f", zero()), &ones).add(&sum)
            }
            Sl2Form::DeltaHProduct => {
                let head = t(&x(F, "A.1f", zero()), &x(E, "A.1e", one()))
                    .add(&t(&gx("A.gl", GForm::G, zero()), &gx("A.gr", GForm::G, zero())));
                let ratio = t(&x(E, "B.e", one()), &x(F, "B.f", zero()));
                let main = self.tensor_mul(&head, &self.tensor_geometric(&ratio));
                // the subtracted product uses the power forms as printed
                let df = self.sl2_delta(Sl2Form::DeltaFPowers, &Placement::printed())?;
                let de = self.sl2_delta(Sl2Form::DeltaEPowers, &Placement::printed())?;
                let sub = self.tensor_mul(&df.shift(&p.at("D.f", zero())), &de.shift(&p.at("D.e", one())));
                main.sub(&sub)
            }
            Sl2Form::DeltaHPowers => {
                // sum (-1)^k (k+1) X^k is the square of sum (-X)^k
                let ratio = t(&x(E, "e", one()), &x(F, "f", one()));
                let geo = self.tensor_geometric(&ratio);
                let left = t(&x(H, "hl", zero()), &ones);
                let right = t(&ones, &x(H, "hr", zero()));
                self.tensor_mul(&self.tensor_mul(&left, &self.tensor_mul(&geo, &geo)), &right)
            }
            _ => return Err(RttError::Range(format!("{} is not a coproduct form", form.name()))),
        })
    }

    /// Evaluates one `sl_2` antipode display under a placement.
    pub fn sl2_antipode(&self, form: Sl2Form, p: &Placement) -> Result<AlgebraSeries, RttError> {
        require_n(self, 2)?;
        let alg = self.algebra_ring();
        let x = |kind, slot: &str, c: Rational| self.x(kind, 1, p, slot, c);
        let gx = |slot: &str, form, c: Rational| self.gx(1, p, slot, form, c);
        Ok(match form {
            Sl2Form::AntipodeE => x(E, "e", one()).mul(alg, &gx("g", GForm::G, zero()).inverse(alg)?).neg(),
            Sl2Form::AntipodeF => gx("g", GForm::GTilde, zero()).inverse(alg)?.mul(alg, &x(F, "f", one())).neg(),
            Sl2Form::AntipodeH => {
                let main = gx("g", GForm::GTilde, zero()).inverse(alg)?;
                // S(e(u+1)) and S(f(u)) from the printed displays
                let se = self.sl2_antipode(Sl2Form::AntipodeE, &Placement::printed())?;
                let sf = self.sl2_antipode(Sl2Form::AntipodeF, &Placement::printed())?;
                let se = se.shift(&p.at("D.e", zero()));
                let sf = sf.shift(&p.at("D.f", int(-1)));
                main.sub(&se.mul(alg, &sf))
            }
            _ => return Err(RttError::Range(format!("{} is not an antipode form", form.name()))),
        })
    }

    pub fn check_sl2_form(&self, form: Sl2Form) -> Result<ClosedCheck, RttError> {
        require_n(self, 2)?;
        if form.is_delta() {
            let truth = self.pullback_delta(form.kind(), 1);
            self.check_closed(form.name(), &truth, |p| self.sl2_delta(form, p))
        } else {
            let truth = self.pullback_antipode(form.kind(), 1).shift(&one());
            self.check_closed(form.name(), &truth, |p| self.sl2_antipode(form, p))
        }
    }

    /// `eps(e) = eps(f) = 0`, `eps(h) = 1` against the pulled-back counit.
    pub fn check_sl2_counit(&self) -> Result<Vec<ClosedCheck>, RttError> {
        require_n(self, 2)?;
        [E, F, H]
            .into_iter()
            .map(|kind| {
                let truth = self.pullback_counit(kind, 1);
                self.check_closed(&format!("sl2 eps({kind}(u))"), &truth, |_| Ok(self.counit_formula(kind)))
            })
            .collect()
    }

    /// Every `sl_2` display, counit included.
    pub fn check_sl2_closed_forms(&self) -> Result<Vec<ClosedCheck>, RttError> {
        let mut out = Sl2Form::ALL.iter().map(|&f| self.check_sl2_form(f)).collect::<Result<Vec<_>, _>>()?;
        out.extend(self.check_sl2_counit()?);
        Ok(out)
    }

    /// Shifts every spectral argument of `form` by ±1 in turn and records
    /// where each variant first departs from the pullback.
    pub fn mutation_scan(&self, form: Sl2Form) -> Result<Vec<Mutation>, RttError> {
        require_n(self, 2)?;
        let order = self.order();
        let printed = Placement::printed();
        let eval_diff = |p: &Placement| -> Result<Option<usize>, RttError> {
            let report = if form.is_delta() {
                compare(form.name(), &self.sl2_delta(form, p)?, &self.pullback_delta(form.kind(), 1), order)
            } else {
                let truth = self.pullback_antipode(form.kind(), 1).shift(&one());
                compare(form.name(), &self.sl2_antipode(form, p)?, &truth, order)
            };
            Ok(report.report.first_failing_degree())
        };
        // records the slots
        eval_diff(&printed)?;
        printed
            .neighbours()
            .into_iter()
            .filter(|p| p.change_count() == 1)
            .map(|p| {
                Ok(Mutation {
                    variant: p.describe(),
                    first_failing_degree: eval_diff(&p)?,
                })
            })
            .collect()
    }

    /// `[x^(0)_j, s]` coefficientwise.
    fn bracket_zero_mode(&self, kind: CurrentKind, j: usize, s: &AlgebraSeries) -> AlgebraSeries {
        let alg = self.algebra_ring();
        let m = self.currents().mode(kind, j, 0);
        s.map_linear(|c| alg.commutator(&m, c))
    }

    /// `a ⊗ b - [e_j^(0), a] ⊗ [f_j^(0), b]`.
    fn sl3_pair(&self, j: usize, a: &AlgebraSeries, b: &AlgebraSeries) -> TensorSeries {
        tensor_series(a, b).sub(&tensor_series(&self.bracket_zero_mode(E, j, a), &self.bracket_zero_mode(F, j, b)))
    }

    /// The `sl_3` coproduct displays for `x_i(u)`; `i = 2` is the printed
    /// display with the subscripts 1 and 2 exchanged.
    pub fn sl3_delta(&self, kind: CurrentKind, i: usize, p: &Placement) -> Result<TensorSeries, RttError> {
        require_n(self, 3)?;
        if !(1..=2).contains(&i) {
            return Err(RttError::Range(format!("sl3 index {i}")));
        }
        let j = 3 - i;
        let x = |kind, slot: &str, c: Rational| self.x(kind, i, p, slot, c);
        let gx = |slot: &str, form, c: Rational| self.gx(i, p, slot, form, c);
        let ones = AlgebraSeries::one(self.order());
        let right_ratio = || self.sl3_pair(j, &x(E, "B.e", one()), &x(F, "B.f", zero()));
        Ok(match kind {
            CurrentKind::E => {
                let ratio = self.sl3_pair(j, &x(E, "X.e", zero()), &x(F, "X.f", one()));
                let tail = tensor_series(&ones, &x(E, "Y.1e", zero()))
                    .add(&self.sl3_pair(j, &x(E, "Y.e", zero()), &gx("Y.g", GForm::GTilde, zero())));
                self.tensor_mul(&self.tensor_geometric(&ratio), &tail)
            }
            CurrentKind::F => {
                let head = tensor_series(&x(F, "A.1f", zero()), &ones)
                    .add(&self.sl3_pair(j, &gx("A.g", GForm::G, zero()), &x(F, "A.f", zero())));
                self.tensor_mul(&head, &self.tensor_geometric(&right_ratio()))
            }
            CurrentKind::H => {
                let head = tensor_series(&x(F, "A.1f", zero()), &x(E, "A.1e", zero()))
                    .add(&self.sl3_pair(j, &gx("A.gl", GForm::G, zero()), &gx("A.gr", GForm::G, zero())));
                let main = self.tensor_mul(&head, &self.tensor_geometric(&right_ratio()));
                let df = self.sl3_delta(F, i, &Placement::printed())?;
                let de = self.sl3_delta(E, i, &Placement::printed())?;
                let sub = self.tensor_mul(&df.shift(&p.at("D.f", zero())), &de.shift(&p.at("D.e", one())));
                main.sub(&sub)
            }
        })
    }

    pub fn check_sl3_form(&self, kind: CurrentKind, i: usize) -> Result<ClosedCheck, RttError> {
        require_n(self, 3)?;
        let truth = self.pullback_delta(kind, i);
        let name = if i == 1 {
            format!("sl3 Delta({kind}_1(u))")
        } else {
            format!("sl3 Delta({kind}_{i}(u)) (subscripts exchanged)")
        };
        self.check_closed(&name, &truth, |p| self.sl3_delta(kind, i, p))
    }

    pub fn check_sl3_closed_forms(&self) -> Result<Vec<ClosedCheck>, RttError> {
        let mut out = Vec::new();
        for i in 1..=2 {
            for kind in [E, F, H] {
                out.push(self.check_sl3_form(kind, i)?);
            }
        }
        Ok(out)
    }
}
