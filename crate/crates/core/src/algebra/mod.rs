//! The RTT algebra `Y(gl_n)` (or its quotient `Y(sl_n)`) at finite
//! truncation degree, with normal ordering and tensor powers.
//!
//! Elements are linear combinations of normal words in the generators
//! `T_{i,j}^{(k)}`. Out-of-order adjacent pairs are rewritten with the mode
//! commutator
//!
//! ```text
//! [T_ij^(r), T_kl^(s)] = - sum_{p=1}^{min(r,s)} ( T_kj^(p-1) T_il^(r+s-p) - T_kj^(r+s-p) T_il^(p-1) )
//! ```
//!
//! (with `T^(0)` the Kronecker delta), obtained by matching coefficients of
//! `u^{-r} v^{-s}` in
//! `-(u - v) [T_ij(u), T_kl(v)] = T_kj(u) T_il(v) - T_kj(v) T_il(u)`.
//! Every correction has degree `r + s - 1`, so rewriting terminates.

mod lincomb;
mod ring;
mod tensor;
mod word;

use std::borrow::Borrow;

use dashmap::DashMap;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub use lincomb::{Element, LinComb, Tensor3Element, TensorElement};
pub use ring::Ring;
pub use tensor::{tensor_product, Tensor3Ring, TensorRing};
pub use word::{Generator, Monomial, Word};

use crate::error::AlgebraError;
use crate::scalar::{int, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuotientMode {
    Gl,
    Sl,
}

impl std::fmt::Display for QuotientMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            QuotientMode::Gl => "gl",
            QuotientMode::Sl => "sl",
        })
    }
}

/// Which adjacent inversion the uncached rewriter resolves first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sweep {
    LeftToRight,
    RightToLeft,
}

impl Borrow<[Generator]> for Word {
    fn borrow(&self) -> &[Generator] {
        &self.0
    }
}

/// Truncated RTT algebra context.
///
/// In SL mode the generators `T_{n,n}^{(k)}` are eliminated through the
/// coefficients of `qdet T(u) = 1`; the substitution table is prepared up
/// to degree `2N` so that any product of two truncated elements can be
/// normal-ordered exactly.
pub struct Algebra {
    n: usize,
    max_degree: u32,
    mode: QuotientMode,
    eliminated: Vec<Element>,
    cache: DashMap<Word, Element>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("n", &self.n)
            .field("max_degree", &self.max_degree)
            .field("mode", &self.mode)
            .finish()
    }
}

impl Algebra {
    pub fn new(n: usize, max_degree: u32, mode: QuotientMode) -> Result<Self, AlgebraError> {
        if !(2..=255).contains(&n) {
            return Err(AlgebraError::BadSize(n));
        }
        if max_degree < 1 {
            return Err(AlgebraError::BadDegree);
        }
        let mut alg = Algebra {
            n,
            max_degree,
            mode: QuotientMode::Gl,
            eliminated: Vec::new(),
            cache: DashMap::new(),
        };
        if mode == QuotientMode::Sl {
            alg.mode = QuotientMode::Sl;
            alg.build_elimination_table()?;
        }
        Ok(alg)
    }

    pub fn gl(n: usize, max_degree: u32) -> Result<Self, AlgebraError> {
        Self::new(n, max_degree, QuotientMode::Gl)
    }

    pub fn sl(n: usize, max_degree: u32) -> Result<Self, AlgebraError> {
        Self::new(n, max_degree, QuotientMode::Sl)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn mode(&self) -> QuotientMode {
        self.mode
    }

    fn check_index(&self, i: usize, j: usize) -> Result<(), AlgebraError> {
        if i < 1 || j < 1 || i > self.n || j > self.n {
            return Err(AlgebraError::BadIndex { i, j, n: self.n });
        }
        Ok(())
    }

    fn is_eliminated(&self, g: Generator) -> bool {
        self.mode == QuotientMode::Sl && g.row() == self.n && g.col() == self.n
    }

    /// `T_{i,j}^{(k)}` as an element; mode 0 is the scalar `delta_ij`.
    pub fn generator(&self, i: usize, j: usize, k: u32) -> Result<Element, AlgebraError> {
        self.check_index(i, j)?;
        if k > self.max_degree {
            return Err(AlgebraError::Truncation {
                needed: k,
                max: self.max_degree,
            });
        }
        Ok(self.generator_unchecked(i, j, k))
    }

    pub(crate) fn generator_unchecked(&self, i: usize, j: usize, k: u32) -> Element {
        if k == 0 {
            return if i == j { Element::one() } else { Element::zero() };
        }
        self.normal_form(&[Generator::new(i, j, k)])
    }

    /// Raw commutator `[a, b]` as words of at most two symbols, before
    /// normal ordering.
    fn raw_commutator(&self, a: Generator, b: Generator) -> Vec<(Rational, Vec<Generator>)> {
        let (i, j, r) = (a.row(), a.col(), a.mode());
        let (k, l, s) = (b.row(), b.col(), b.mode());
        let mut out = Vec::new();
        for p in 1..=r.min(s) {
            // - T_kj^(p-1) T_il^(r+s-p)
            if let Some(w) = two_symbol_word((k, j, p - 1), (i, l, r + s - p)) {
                out.push((int(-1), w));
            }
            // + T_kj^(r+s-p) T_il^(p-1)
            if let Some(w) = two_symbol_word((k, j, r + s - p), (i, l, p - 1)) {
                out.push((int(1), w));
            }
        }
        out
    }

    /// `[T_ij^(r), T_kl^(s)]` in normal form.
    pub fn mode_commutator(
        &self,
        (i, j, r): (usize, usize, u32),
        (k, l, s): (usize, usize, u32),
    ) -> Result<Element, AlgebraError> {
        self.check_index(i, j)?;
        self.check_index(k, l)?;
        if r == 0 || s == 0 {
            return Ok(Element::zero());
        }
        if r + s - 1 > self.max_degree {
            return Err(AlgebraError::Truncation {
                needed: r + s - 1,
                max: self.max_degree,
            });
        }
        let mut out = Element::zero();
        for (c, w) in self.raw_commutator(Generator::new(i, j, r), Generator::new(k, l, s)) {
            out.add_scaled(&self.normal_form(&w), &c);
        }
        Ok(out)
    }

    /// Normal form of an arbitrary word of degree at most `max_degree`.
    pub fn normal_order(&self, w: &Word) -> Result<Element, AlgebraError> {
        for g in w.symbols() {
            self.check_index(g.row(), g.col())?;
        }
        if w.degree() > self.max_degree {
            return Err(AlgebraError::Truncation {
                needed: w.degree(),
                max: self.max_degree,
            });
        }
        Ok(self.normal_form(&w.0))
    }

    fn elimination(&self, g: Generator) -> &Element {
        let k = g.mode() as usize;
        self.eliminated.get(k - 1).unwrap_or_else(|| {
            panic!(
                "T_nn^({k}) elimination requested beyond the prepared degree {}",
                self.eliminated.len()
            )
        })
    }

    /// Cached normal form. Exact for any word whose eliminated symbols are
    /// covered by the substitution table (always true for products of two
    /// truncated elements).
    pub(crate) fn normal_form(&self, w: &[Generator]) -> Element {
        if w.is_empty() {
            return Element::one();
        }
        if let Some(hit) = self.cache.get(w) {
            return hit.clone();
        }
        let out = self.rewrite_step(w, Sweep::LeftToRight, &mut |alg, word| alg.normal_form(word));
        self.cache.insert(Word(w.to_vec()), out.clone());
        out
    }

    /// Uncached normal form resolving inversions in the given sweep order.
    /// Used to check that the rewriting system is confluent.
    pub fn normal_order_by(&self, w: &Word, sweep: Sweep) -> Element {
        fn go(alg: &Algebra, w: &[Generator], sweep: Sweep) -> Element {
            if w.is_empty() {
                return Element::one();
            }
            alg.rewrite_step(w, sweep, &mut |a, word| go(a, word, sweep))
        }
        go(self, &w.0, sweep)
    }

    fn rewrite_step(
        &self,
        w: &[Generator],
        sweep: Sweep,
        recurse: &mut dyn FnMut(&Algebra, &[Generator]) -> Element,
    ) -> Element {
        let elim_pos = match sweep {
            Sweep::LeftToRight => w.iter().position(|&g| self.is_eliminated(g)),
            Sweep::RightToLeft => w.iter().rposition(|&g| self.is_eliminated(g)),
        };
        if let Some(p) = elim_pos {
            let mut out = Element::zero();
            for (word, c) in self.elimination(w[p]).iter() {
                let mut next = Vec::with_capacity(w.len() + word.len());
                next.extend_from_slice(&w[..p]);
                next.extend_from_slice(word.symbols());
                next.extend_from_slice(&w[p + 1..]);
                out.add_scaled(&recurse(self, &next), c);
            }
            return out;
        }
        let descent = match sweep {
            Sweep::LeftToRight => (0..w.len() - 1).find(|&p| w[p] > w[p + 1]),
            Sweep::RightToLeft => (0..w.len() - 1).rev().find(|&p| w[p] > w[p + 1]),
        };
        let Some(p) = descent else {
            return Element::term(Word(w.to_vec()), Rational::one());
        };
        let mut swapped = w.to_vec();
        swapped.swap(p, p + 1);
        let mut out = recurse(self, &swapped);
        for (c, corr) in self.raw_commutator(w[p], w[p + 1]) {
            let mut next = Vec::with_capacity(w.len());
            next.extend_from_slice(&w[..p]);
            next.extend_from_slice(&corr);
            next.extend_from_slice(&w[p + 2..]);
            out.add_scaled(&recurse(self, &next), &c);
        }
        out
    }

    /// Normal form of the concatenation of two words (not truncated).
    pub(crate) fn word_product(&self, a: &Word, b: &Word) -> Element {
        if a.is_empty() {
            return self.normal_form(&b.0);
        }
        if b.is_empty() {
            return self.normal_form(&a.0);
        }
        let mut w = Vec::with_capacity(a.len() + b.len());
        w.extend_from_slice(&a.0);
        w.extend_from_slice(&b.0);
        self.normal_form(&w)
    }

    /// Rewrites an element of `Y(gl_n)` into the SL normal form.
    pub fn sl_reduce(&self, a: &Element) -> Result<Element, AlgebraError> {
        if self.mode != QuotientMode::Sl {
            return Err(AlgebraError::WrongMode("sl"));
        }
        let mut out = Element::zero();
        for (w, c) in a.iter() {
            for g in w.symbols() {
                self.check_index(g.row(), g.col())?;
                if self.is_eliminated(g.to_owned()) && g.mode() as usize > self.eliminated.len() {
                    return Err(AlgebraError::Truncation {
                        needed: g.mode(),
                        max: self.eliminated.len() as u32,
                    });
                }
            }
            if w.degree() as usize > self.eliminated.len() {
                return Err(AlgebraError::Truncation {
                    needed: w.degree(),
                    max: self.eliminated.len() as u32,
                });
            }
            out.add_scaled(&self.normal_form(&w.0), c);
        }
        Ok(out.truncated(self.max_degree))
    }

    /// The element substituted for `T_{n,n}^{(k)}` in SL mode.
    pub fn eliminated_generator(&self, k: u32) -> Option<&Element> {
        if k == 0 {
            return None;
        }
        self.eliminated.get(k as usize - 1)
    }

    fn build_elimination_table(&mut self) -> Result<(), AlgebraError> {
        let limit = 2 * self.max_degree;
        let gl = Algebra::gl(self.n, limit)?;
        let qdet = crate::rtt::qdet_of(&gl, &crate::rtt::t_matrix(&gl));
        for k in 1..=limit {
            let tnn = Word::single(Generator::new(self.n, self.n, k));
            let mut rest = qdet.coeff(k as usize);
            debug_assert!(rest.coeff(&tnn).is_one());
            rest.add_term(tnn, -Rational::one());
            let mut x = Element::zero();
            for (w, c) in rest.iter() {
                x.add_scaled(&self.normal_form(&w.0), &-c.clone());
            }
            self.eliminated.push(x);
        }
        Ok(())
    }

    /// Number of cached normal forms (diagnostics only).
    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }
}

fn two_symbol_word(a: (usize, usize, u32), b: (usize, usize, u32)) -> Option<Vec<Generator>> {
    let mut out = Vec::with_capacity(2);
    for (i, j, k) in [a, b] {
        if k == 0 {
            if i != j {
                return None;
            }
        } else {
            out.push(Generator::new(i, j, k));
        }
    }
    Some(out)
}

impl Ring for Algebra {
    type Key = Word;

    fn max_degree(&self) -> u32 {
        self.max_degree
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                out.add_scaled(&self.word_product(wa, wb), &(ca * cb));
            }
        }
        out.truncated(self.max_degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(alg: &Algebra, i: usize, j: usize, k: u32) -> Element {
        alg.generator(i, j, k).unwrap()
    }

    fn word(syms: &[(usize, usize, u32)]) -> Word {
        syms.iter().map(|&(i, j, k)| Generator::new(i, j, k)).collect()
    }

    #[test]
    fn mode_commutator_examples() {
        let alg = Algebra::gl(2, 3).unwrap();
        assert_eq!(
            alg.mode_commutator((1, 2, 1), (2, 1, 1)).unwrap(),
            &t(&alg, 2, 2, 1) - &t(&alg, 1, 1, 1)
        );
        assert!(alg.mode_commutator((1, 2, 1), (1, 2, 1)).unwrap().is_zero());
        assert_eq!(alg.mode_commutator((1, 2, 1), (1, 1, 1)).unwrap(), t(&alg, 1, 2, 1));
    }

    #[test]
    fn mode_commutator_rejects_overflow() {
        let alg = Algebra::gl(2, 2).unwrap();
        assert!(matches!(
            alg.mode_commutator((1, 2, 2), (2, 1, 2)),
            Err(AlgebraError::Truncation { needed: 3, max: 2 })
        ));
    }

    #[test]
    fn normal_order_examples() {
        let alg = Algebra::gl(2, 2).unwrap();
        let got = alg.normal_order(&word(&[(1, 2, 1), (1, 1, 1)])).unwrap();
        let mut want = Element::term(word(&[(1, 1, 1), (1, 2, 1)]), int(1));
        want += &t(&alg, 1, 2, 1);
        assert_eq!(got, want);

        let normal = word(&[(1, 1, 1), (2, 1, 1)]);
        assert_eq!(alg.normal_order(&normal).unwrap(), Element::term(normal, int(1)));

        let ab = alg.normal_order(&word(&[(1, 2, 1), (2, 1, 1)])).unwrap();
        let ba = alg.normal_order(&word(&[(2, 1, 1), (1, 2, 1)])).unwrap();
        assert_eq!(&ab - &ba, &t(&alg, 2, 2, 1) - &t(&alg, 1, 1, 1));
    }

    #[test]
    fn multiply_examples() {
        let alg = Algebra::gl(2, 2).unwrap();
        let x = &t(&alg, 1, 2, 1) + &t(&alg, 2, 1, 2);
        assert_eq!(alg.mul(&Element::one(), &x), x);
        let sq = alg.mul(&t(&alg, 1, 1, 1), &t(&alg, 1, 1, 1));
        assert_eq!(sq, Element::term(word(&[(1, 1, 1), (1, 1, 1)]), int(1)));
        let p = alg.mul(&t(&alg, 1, 2, 1), &t(&alg, 1, 1, 1));
        let mut want = Element::term(word(&[(1, 1, 1), (1, 2, 1)]), int(1));
        want += &t(&alg, 1, 2, 1);
        assert_eq!(p, want);
    }

    #[test]
    fn truncation_drops_only_high_degree_terms() {
        let alg = Algebra::gl(2, 1).unwrap();
        // exact product is T11 T12 + T12; only the degree-2 word is dropped
        let p = alg.mul(&t(&alg, 1, 2, 1), &t(&alg, 1, 1, 1));
        assert_eq!(p, t(&alg, 1, 2, 1));
        assert!(alg.normal_order(&word(&[(1, 2, 1), (1, 1, 1)])).is_err());
    }

    #[test]
    fn sl_reduce_n2_first_mode() {
        let alg = Algebra::sl(2, 2).unwrap();
        let gl_elem = Element::term(word(&[(2, 2, 1)]), int(1));
        assert_eq!(alg.sl_reduce(&gl_elem).unwrap(), -t(&alg, 1, 1, 1));
        let free = &t(&alg, 1, 2, 1) + &t(&alg, 2, 1, 2);
        assert_eq!(alg.sl_reduce(&free).unwrap(), free);
        assert!(Algebra::gl(2, 2).unwrap().sl_reduce(&free).is_err());
    }

    #[test]
    fn sl_reduce_n2_second_mode_is_free_of_eliminated_generators() {
        let alg = Algebra::sl(2, 2).unwrap();
        let x = alg.eliminated_generator(2).unwrap();
        assert!(x.max_degree() <= 2);
        assert!(x
            .keys()
            .all(|w| w.symbols().iter().all(|g| !(g.row() == 2 && g.col() == 2))));
        // qdet coefficient of u^-2 with T22^(1) = -T11^(1):
        // T22^(2) = -T11^(2) + T11^(1) T11^(1) + T21^(1) T12^(1) - T11^(1)
        let mut want = -t(&alg, 1, 1, 2);
        want += &alg.mul(&t(&alg, 1, 1, 1), &t(&alg, 1, 1, 1));
        want += &alg.mul(&t(&alg, 2, 1, 1), &t(&alg, 1, 2, 1));
        want -= &t(&alg, 1, 1, 1);
        assert_eq!(x, &want);
    }

    #[test]
    fn sweeps_agree_on_a_small_word() {
        let alg = Algebra::sl(3, 4).unwrap();
        let w = word(&[(3, 3, 1), (2, 1, 2), (1, 3, 1)]);
        assert_eq!(
            alg.normal_order_by(&w, Sweep::LeftToRight),
            alg.normal_order_by(&w, Sweep::RightToLeft)
        );
        assert_eq!(alg.normal_order_by(&w, Sweep::LeftToRight), alg.normal_order(&w).unwrap());
    }

    #[test]
    fn rejects_bad_contexts() {
        assert_eq!(Algebra::gl(1, 2).unwrap_err(), AlgebraError::BadSize(1));
        assert_eq!(Algebra::gl(2, 0).unwrap_err(), AlgebraError::BadDegree);
        let alg = Algebra::gl(2, 2).unwrap();
        assert!(alg.generator(3, 1, 1).is_err());
        assert!(alg.generator(1, 1, 3).is_err());
        assert_eq!(alg.generator(1, 1, 0).unwrap(), Element::one());
        assert!(alg.generator(1, 2, 0).unwrap().is_zero());
    }
}
