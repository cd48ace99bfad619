//! JSON and LaTeX renderings of elements and series.

use serde_json::{json, Value};

use crate::algebra::{LinComb, Monomial, Word};
use crate::scalar::{format_rational, latex_coefficient};
use crate::series::Series;

/// Serde helper writing a rational as its canonical string.
pub fn rational_str<S: serde::Serializer>(x: &crate::scalar::Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

/// Monomials that know how to render themselves.
pub trait RenderKey: Monomial {
    /// Fields of one term besides `coeff`.
    fn json_fields(&self, obj: &mut serde_json::Map<String, Value>);
    fn latex(&self) -> String;
}

fn word_json(w: &Word) -> Value {
    Value::Array(
        w.symbols()
            .iter()
            .map(|g| json!([g.row(), g.col(), g.mode()]))
            .collect(),
    )
}

fn word_latex(w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.symbols()
        .iter()
        .map(|g| format!("T_{{{},{}}}^{{({})}}", g.row(), g.col(), g.mode()))
        .collect::<Vec<_>>()
        .join(" ")
}

impl RenderKey for Word {
    fn json_fields(&self, obj: &mut serde_json::Map<String, Value>) {
        obj.insert("word".into(), word_json(self));
    }
    fn latex(&self) -> String {
        word_latex(self)
    }
}

impl RenderKey for (Word, Word) {
    fn json_fields(&self, obj: &mut serde_json::Map<String, Value>) {
        obj.insert("left".into(), word_json(&self.0));
        obj.insert("right".into(), word_json(&self.1));
    }
    fn latex(&self) -> String {
        format!("{} \\otimes {}", word_latex(&self.0), word_latex(&self.1))
    }
}

impl RenderKey for (Word, Word, Word) {
    fn json_fields(&self, obj: &mut serde_json::Map<String, Value>) {
        obj.insert(
            "slots".into(),
            Value::Array(vec![word_json(&self.0), word_json(&self.1), word_json(&self.2)]),
        );
    }
    fn latex(&self) -> String {
        format!(
            "{} \\otimes {} \\otimes {}",
            word_latex(&self.0),
            word_latex(&self.1),
            word_latex(&self.2)
        )
    }
}

pub fn element_json<K: RenderKey>(x: &LinComb<K>) -> Value {
    Value::Array(
        x.iter()
            .map(|(k, c)| {
                let mut obj = serde_json::Map::new();
                obj.insert("coeff".into(), Value::String(format_rational(c)));
                k.json_fields(&mut obj);
                Value::Object(obj)
            })
            .collect(),
    )
}

pub fn series_json<K: RenderKey>(s: &Series<K>) -> Value {
    json!({
        "order": s.order(),
        "constant": format_rational(s.constant()),
        "coeffs": s.coeffs().iter().map(element_json).collect::<Vec<_>>(),
    })
}

pub fn element_latex<K: RenderKey>(x: &LinComb<K>) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (k, c)) in x.iter().enumerate() {
        let negative = num_traits::Signed::is_negative(c);
        out.push_str(match (idx == 0, negative) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        let magnitude = num_traits::Signed::abs(c);
        let coeff = latex_coefficient(&magnitude, true);
        if *k == K::unit() {
            out.push_str(if coeff.is_empty() { "1" } else { &coeff });
        } else {
            let key = k.latex();
            out.push_str(&coeff);
            // keeps `2 (1 ⊗ x)` from reading as `21 ⊗ x`
            if !coeff.is_empty() && key.starts_with(|ch: char| ch.is_ascii_digit()) {
                out.push_str(" \\cdot ");
            }
            out.push_str(&key);
        }
    }
    out
}

pub fn series_latex<K: RenderKey>(s: &Series<K>) -> String {
    let mut parts = Vec::new();
    if !num_traits::Zero::is_zero(s.constant()) {
        parts.push(format_rational(s.constant()));
    }
    for (p, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        parts.push(format!("\\left({}\\right) u^{{-{}}}", element_latex(c), p + 1));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Plain-text rendering: `c*word` terms joined with ` + `.
pub fn element_text<K: RenderKey + std::fmt::Debug>(x: &LinComb<K>, render: impl Fn(&K) -> String) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.iter()
        .map(|(k, c)| format!("({})*{}", format_rational(c), render(k)))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn word_text(w: &Word) -> String {
    w.to_string()
}

pub fn pair_text(k: &(Word, Word)) -> String {
    format!("{} (x) {}", k.0, k.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Element, Generator};
    use crate::scalar::{int, rat};

    #[test]
    fn element_serialization_is_canonical() {
        let w = Word(vec![Generator::new(1, 1, 1), Generator::new(1, 2, 1)]);
        let mut x = Element::term(w, rat(-1, 2));
        x.add_term(Word::single(Generator::new(2, 1, 1)), int(3));
        let v = element_json(&x);
        assert_eq!(
            v,
            json!([
                {"coeff": "3", "word": [[2, 1, 1]]},
                {"coeff": "-1/2", "word": [[1, 1, 1], [1, 2, 1]]},
            ])
        );
    }

    #[test]
    fn latex_rendering() {
        let alg = Algebra::gl(2, 2).unwrap();
        let x = &alg.generator(1, 2, 1).unwrap() - &Element::scalar(rat(1, 2));
        assert_eq!(element_latex(&x), "-\\frac{1}{2} + T_{1,2}^{(1)}");
        assert_eq!(element_latex(&Element::zero()), "0");
    }
}
