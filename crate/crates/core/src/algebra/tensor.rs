use super::lincomb::{Tensor3Element, TensorElement};
use super::ring::Ring;
use super::word::Word;
use super::Algebra;

/// `A ⊗ A` with componentwise multiplication; truncation applies to the
/// total degree of both slots.
#[derive(Clone, Copy, Debug)]
pub struct TensorRing<'a> {
    pub alg: &'a Algebra,
}

impl<'a> TensorRing<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        TensorRing { alg }
    }
}

impl Ring for TensorRing<'_> {
    type Key = (Word, Word);

    fn max_degree(&self) -> u32 {
        self.alg.max_degree()
    }

    fn mul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        let max = self.alg.max_degree();
        let mut out = TensorElement::zero();
        for ((l1, r1), c1) in a.iter() {
            for ((l2, r2), c2) in b.iter() {
                let left = self.alg.word_product(l1, l2);
                let right = self.alg.word_product(r1, r2);
                let c = c1 * c2;
                for (wl, cl) in left.iter() {
                    let dl = wl.degree();
                    if dl > max {
                        continue;
                    }
                    let cc = &c * cl;
                    for (wr, cr) in right.iter() {
                        if dl + wr.degree() <= max {
                            out.add_term((wl.clone(), wr.clone()), &cc * cr);
                        }
                    }
                }
            }
        }
        out
    }
}

/// `A ⊗ A ⊗ A`, used for coassociativity.
#[derive(Clone, Copy, Debug)]
pub struct Tensor3Ring<'a> {
    pub alg: &'a Algebra,
}

impl<'a> Tensor3Ring<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        Tensor3Ring { alg }
    }
}

impl Ring for Tensor3Ring<'_> {
    type Key = (Word, Word, Word);

    fn max_degree(&self) -> u32 {
        self.alg.max_degree()
    }

    fn mul(&self, a: &Tensor3Element, b: &Tensor3Element) -> Tensor3Element {
        let max = self.alg.max_degree();
        let mut out = Tensor3Element::zero();
        for ((x1, y1, z1), c1) in a.iter() {
            for ((x2, y2, z2), c2) in b.iter() {
                let xs = self.alg.word_product(x1, x2);
                let ys = self.alg.word_product(y1, y2);
                let zs = self.alg.word_product(z1, z2);
                let c = c1 * c2;
                for (wx, cx) in xs.iter() {
                    for (wy, cy) in ys.iter() {
                        let dxy = wx.degree() + wy.degree();
                        if dxy > max {
                            continue;
                        }
                        for (wz, cz) in zs.iter() {
                            if dxy + wz.degree() <= max {
                                out.add_term((wx.clone(), wy.clone(), wz.clone()), &c * cx * cy * cz);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// `a ⊗ b` for algebra elements.
pub fn tensor_product(a: &super::Element, b: &super::Element) -> TensorElement {
    let mut out = TensorElement::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            out.add_term((wa.clone(), wb.clone()), ca * cb);
        }
    }
    out
}
