use super::{minor_column_form, Yangian};
use crate::algebra::{QuotientMode, Word};
use crate::error::{AlgebraError, RttError};
use crate::report::VerificationReport;
use crate::scalar::int;
use crate::series::{AlgebraSeries, SeriesMatrix};

impl Yangian {
    /// `T^{-1}(u)`.
    pub fn t_inverse(&self) -> SeriesMatrix<Word> {
        self.t().inverse(self.algebra()).expect("T(u) has identity constant part")
    }

    /// `T*(u) = T(-u)^{-1}`.
    pub fn t_star(&self) -> SeriesMatrix<Word> {
        self.t()
            .map(|s| s.negate_variable())
            .inverse(self.algebra())
            .expect("T(-u) has identity constant part")
    }

    /// Quantum minor of `T*(u)`.
    pub fn star_minor(&self, star: &SeriesMatrix<Word>, rows: &[usize], cols: &[usize]) -> AlgebraSeries {
        minor_column_form(self.algebra(), star, rows, cols)
    }

    /// `(-1)^{i+j} t(1..n without j; 1..n without i)(u)`, which equals
    /// `(T^{-1}(u+n-1))_{ij}` when `qdet T(u) = 1`.
    pub fn inverse_entry(&self, i: usize, j: usize) -> Result<AlgebraSeries, RttError> {
        let n = self.n();
        let rows: Vec<usize> = (1..=n).filter(|&x| x != j).collect();
        let cols: Vec<usize> = (1..=n).filter(|&x| x != i).collect();
        let m = self.minor(&rows, &cols)?;
        Ok(if (i + j).is_multiple_of(2) { m } else { m.neg() })
    }

    pub(crate) fn require_sl(&self) -> Result<(), RttError> {
        if self.mode() != QuotientMode::Sl {
            return Err(AlgebraError::WrongMode("sl").into());
        }
        Ok(())
    }

    /// Compares every entry of `T^{-1}(u+n-1)` with the complementary minor.
    pub fn inverse_entry_check(&self) -> Result<VerificationReport, RttError> {
        self.require_sl()?;
        let n = self.n();
        let inv = self.t_inverse();
        let shift = int(n as i64 - 1);
        let mut report = VerificationReport::new("inverse-entry")
            .with_param("n", n)
            .with_param("order", self.order());
        for i in 1..=n {
            for j in 1..=n {
                let lhs = inv.entry(i, j).shift(&shift);
                let rhs = self.inverse_entry(i, j)?;
                report.check_series(&format!("({i},{j})"), &lhs, &rhs, self.order());
            }
        }
        Ok(report)
    }

    /// The four minor identities relating `t*(...)(-u-n+1)` to minors of
    /// `T(u)`, for every admissible `m`.
    pub fn star_minor_check(&self) -> Result<VerificationReport, RttError> {
        self.require_sl()?;
        let n = self.n();
        let order = self.order();
        let star = self.t_star();
        let eval = |s: AlgebraSeries| s.negate_variable().shift(&int(n as i64 - 1));
        let range = |a: usize, b: usize| (a..=b).collect::<Vec<usize>>();
        let with = |mut xs: Vec<usize>, x: usize| {
            xs.push(x);
            xs
        };
        let prepend = |x: usize, xs: Vec<usize>| {
            let mut out = vec![x];
            out.extend(xs);
            out
        };
        let mut report = VerificationReport::new("star-minors")
            .with_param("n", n)
            .with_param("order", order);
        for m in 1..=n {
            let lhs = eval(self.star_minor(&star, &range(1, m), &range(1, m)));
            let rhs = self.minor(&range(m + 1, n), &range(m + 1, n))?;
            report.check_series(&format!("leading m={m}"), &lhs, &rhs, order);
            if m == n {
                continue;
            }
            let lhs = eval(self.star_minor(&star, &with(range(1, m - 1), m + 1), &range(1, m)));
            let rhs = self.minor(&range(m + 1, n), &prepend(m, range(m + 2, n)))?.neg();
            report.check_series(&format!("lower m={m}"), &lhs, &rhs, order);

            let lhs = eval(self.star_minor(&star, &range(1, m), &with(range(1, m - 1), m + 1)));
            let rhs = self.minor(&prepend(m, range(m + 2, n)), &range(m + 1, n))?.neg();
            report.check_series(&format!("upper m={m}"), &lhs, &rhs, order);

            let idx = with(range(1, m - 1), m + 1);
            let lhs = eval(self.star_minor(&star, &idx, &idx));
            let side = prepend(m, range(m + 2, n));
            let rhs = self.minor(&side, &side)?;
            report.check_series(&format!("swapped m={m}"), &lhs, &rhs, order);
        }
        Ok(report)
    }

    /// Applying `T(u) -> T(-u)^{-1}` twice returns `T(u)`.
    pub fn t_star_involution(&self) -> bool {
        let star = self.t_star();
        let twice = star.map(|s| s.negate_variable()).inverse(self.algebra()).expect("identity constant");
        twice == *self.t()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_first_order() {
        let y = Yangian::new(3, 1, QuotientMode::Gl).unwrap();
        let star = y.t_star();
        assert_eq!(star.entry(1, 2).coeff(1), y.generator(1, 2, 1));
        assert!(y.t_star_involution());
    }

    #[test]
    fn inverse_via_minors() {
        for n in [2, 3] {
            let y = Yangian::new(n, 3, QuotientMode::Sl).unwrap();
            assert!(y.inverse_entry_check().unwrap().passed(), "n = {n}");
        }
        let gl = Yangian::new(2, 2, QuotientMode::Gl).unwrap();
        assert!(gl.inverse_entry_check().is_err());
    }

    #[test]
    fn star_minor_identities() {
        for n in [2, 3] {
            let y = Yangian::new(n, 3, QuotientMode::Sl).unwrap();
            let r = y.star_minor_check().unwrap();
            assert!(r.passed(), "n = {n}\n{r}");
        }
    }
}
