//! Coproduct, antipode and counit of the RTT presentation:
//! `Delta(T_ij(u)) = sum_k T_ik(u) ⊗ T_kj(u)`, `S(T(u)) = T^{-1}(u)`,
//! `eps(T_ij(u)) = delta_ij`, extended (anti-)multiplicatively.

use dashmap::DashMap;

use crate::algebra::{
    tensor_product, Element, LinComb, Ring, Tensor3Element, Tensor3Ring, TensorElement, TensorRing, Word,
};
use crate::rtt::Yangian;
use crate::series::{AlgebraSeries, SeriesMatrix, TensorSeries};

pub struct RttHopf<'a> {
    y: &'a Yangian,
    inverse: SeriesMatrix<Word>,
    delta_words: DashMap<Word, TensorElement>,
    antipode_words: DashMap<Word, Element>,
}

impl<'a> RttHopf<'a> {
    pub fn new(y: &'a Yangian) -> Self {
        RttHopf {
            y,
            inverse: y.t_inverse(),
            delta_words: DashMap::new(),
            antipode_words: DashMap::new(),
        }
    }

    pub fn yangian(&self) -> &'a Yangian {
        self.y
    }

    pub fn tensor_ring(&self) -> TensorRing<'a> {
        TensorRing::new(self.y.algebra())
    }

    pub fn tensor3_ring(&self) -> Tensor3Ring<'a> {
        Tensor3Ring::new(self.y.algebra())
    }

    fn t_mode(&self, i: usize, j: usize, k: u32) -> Element {
        if k == 0 {
            if i == j {
                Element::one()
            } else {
                Element::zero()
            }
        } else {
            self.y.generator(i, j, k)
        }
    }

    /// `Delta(T_ij^(k)) = sum_{a+b=k} sum_l T_il^(a) ⊗ T_lj^(b)`.
    pub fn delta_generator(&self, i: usize, j: usize, k: u32) -> TensorElement {
        let mut out = TensorElement::zero();
        for a in 0..=k {
            for l in 1..=self.y.n() {
                let left = self.t_mode(i, l, a);
                let right = self.t_mode(l, j, k - a);
                if left.is_zero() || right.is_zero() {
                    continue;
                }
                out += &tensor_product(&left, &right);
            }
        }
        out
    }

    fn delta_word(&self, w: &Word) -> TensorElement {
        if w.is_empty() {
            return TensorElement::one();
        }
        if let Some(hit) = self.delta_words.get(w) {
            return hit.clone();
        }
        let ring = self.tensor_ring();
        let syms = w.symbols();
        let (head, last) = syms.split_at(syms.len() - 1);
        let g = last[0];
        let prefix = self.delta_word(&Word(head.to_vec()));
        let out = ring.mul(&prefix, &self.delta_generator(g.row(), g.col(), g.mode()));
        self.delta_words.insert(w.clone(), out.clone());
        out
    }

    pub fn delta(&self, x: &Element) -> TensorElement {
        x.map_linear(|w| self.delta_word(w))
    }

    fn antipode_word(&self, w: &Word) -> Element {
        if w.is_empty() {
            return Element::one();
        }
        if let Some(hit) = self.antipode_words.get(w) {
            return hit.clone();
        }
        let syms = w.symbols();
        let (head, last) = syms.split_at(syms.len() - 1);
        let g = last[0];
        let s_last = self.inverse.entry(g.row(), g.col()).coeff(g.mode() as usize);
        let out = self.y.algebra().mul(&s_last, &self.antipode_word(&Word(head.to_vec())));
        self.antipode_words.insert(w.clone(), out.clone());
        out
    }

    /// Anti-multiplicative extension of `S(T_ij^(k)) = (T^{-1})_ij^(k)`.
    pub fn antipode(&self, x: &Element) -> Element {
        x.map_linear(|w| self.antipode_word(w))
    }

    /// `eps` kills every generator of positive mode.
    pub fn counit(&self, x: &Element) -> Element {
        Element::scalar(x.constant_term())
    }

    pub fn delta_series(&self, s: &AlgebraSeries) -> TensorSeries {
        s.map_linear(|x| self.delta(x))
    }

    pub fn antipode_series(&self, s: &AlgebraSeries) -> AlgebraSeries {
        s.map_linear(|x| self.antipode(x))
    }

    pub fn counit_series(&self, s: &AlgebraSeries) -> AlgebraSeries {
        s.map_linear(|x| self.counit(x))
    }

    /// `(Delta ⊗ id) Delta` and `(id ⊗ Delta) Delta`.
    pub fn coassociativity_sides(&self, x: &Element) -> (Tensor3Element, Tensor3Element) {
        let d = self.delta(x);
        let max = self.y.algebra().max_degree();
        let mut left = Tensor3Element::zero();
        let mut right = Tensor3Element::zero();
        for ((a, b), c) in d.iter() {
            for ((a1, a2), ca) in self.delta_word(a).iter() {
                if a1.degree() + a2.degree() + b.degree() <= max {
                    left.add_term((a1.clone(), a2.clone(), b.clone()), c * ca);
                }
            }
            for ((b1, b2), cb) in self.delta_word(b).iter() {
                if a.degree() + b1.degree() + b2.degree() <= max {
                    right.add_term((a.clone(), b1.clone(), b2.clone()), c * cb);
                }
            }
        }
        (left, right)
    }

    /// `(eps ⊗ id) Delta` and `(id ⊗ eps) Delta`.
    pub fn counit_sides(&self, x: &Element) -> (Element, Element) {
        let d = self.delta(x);
        let mut left = Element::zero();
        let mut right = Element::zero();
        for ((a, b), c) in d.iter() {
            if a.is_empty() {
                left.add_term(b.clone(), c.clone());
            }
            if b.is_empty() {
                right.add_term(a.clone(), c.clone());
            }
        }
        (left, right)
    }

    /// `m (S ⊗ id) Delta` and `m (id ⊗ S) Delta`.
    pub fn antipode_sides(&self, x: &Element) -> (Element, Element) {
        let alg = self.y.algebra();
        let d = self.delta(x);
        let mut left = Element::zero();
        let mut right = Element::zero();
        for ((a, b), c) in d.iter() {
            let wa = Element::term(a.clone(), c.clone());
            let wb = Element::term(b.clone(), c.clone());
            left += &alg.mul(&self.antipode_word(a), &wb);
            right += &alg.mul(&wa, &self.antipode_word(b));
        }
        (left, right)
    }
}

/// Swaps the two tensor slots.
pub fn flip(x: &TensorElement) -> TensorElement {
    x.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())).collect::<LinComb<(Word, Word)>>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuotientMode;
    use crate::scalar::int;
    use crate::series::tensor_series;

    #[test]
    fn coproduct_of_t12() {
        let y = Yangian::new(2, 3, QuotientMode::Gl).unwrap();
        let h = RttHopf::new(&y);
        let got = h.delta_series(y.entry(1, 2));
        let want = tensor_series(y.entry(1, 1), y.entry(1, 2)).add(&tensor_series(y.entry(1, 2), y.entry(2, 2)));
        assert_eq!(got, want);
    }

    #[test]
    fn counit_and_antipode_of_generators() {
        let y = Yangian::new(3, 2, QuotientMode::Gl).unwrap();
        let h = RttHopf::new(&y);
        for i in 1..=3 {
            for j in 1..=3 {
                for k in 1..=2 {
                    assert!(h.counit(&y.generator(i, j, k)).is_zero());
                }
                assert_eq!(h.antipode(&y.generator(i, j, 1)), y.generator(i, j, 1).scale(&int(-1)));
            }
        }
    }

    #[test]
    fn antipode_is_anti_multiplicative() {
        let y = Yangian::new(2, 3, QuotientMode::Gl).unwrap();
        let h = RttHopf::new(&y);
        let alg = y.algebra();
        let a = y.generator(1, 2, 1);
        let b = &y.generator(2, 1, 1) + &y.generator(1, 1, 2);
        let lhs = h.antipode(&alg.mul(&a, &b));
        let rhs = alg.mul(&h.antipode(&b), &h.antipode(&a));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_axiom_on_t12() {
        let y = Yangian::new(2, 3, QuotientMode::Sl).unwrap();
        let h = RttHopf::new(&y);
        for k in 1..=3 {
            let (l, r) = h.antipode_sides(&y.generator(1, 2, k));
            assert!(l.is_zero() && r.is_zero());
        }
    }
}
