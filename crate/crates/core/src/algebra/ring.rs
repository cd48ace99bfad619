use super::lincomb::LinComb;
use super::word::Monomial;

/// A truncated associative algebra with unit over the rationals.
///
/// Implementors only supply multiplication; addition and scaling live on
/// [`LinComb`]. Products drop every monomial of degree above
/// [`Ring::max_degree`].
pub trait Ring: Sync {
    type Key: Monomial;

    fn max_degree(&self) -> u32;

    fn mul(&self, a: &LinComb<Self::Key>, b: &LinComb<Self::Key>) -> LinComb<Self::Key>;

    fn one(&self) -> LinComb<Self::Key> {
        LinComb::one()
    }

    fn commutator(&self, a: &LinComb<Self::Key>, b: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        let mut out = self.mul(a, b);
        out -= &self.mul(b, a);
        out
    }

    fn power(&self, a: &LinComb<Self::Key>, exp: u32) -> LinComb<Self::Key> {
        let mut acc = self.one();
        for _ in 0..exp {
            acc = self.mul(&acc, a);
        }
        acc
    }
}
