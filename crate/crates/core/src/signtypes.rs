//! Sign types: the regions cut out by the hyperplanes `(x, α) = 0` and
//! `(x, α) = 1`, α ∈ Δ⁺.

use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::affine::{minimal_element, AffineWeylElement};
use crate::error::{Error, Result};
use crate::ideals::{enumerate_ideals, Ideal};
use crate::rootsys::RootSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Minus => "-",
            Sign::Zero => "0",
            Sign::Plus => "+",
        }
    }
}

/// One sign per positive root, in root order.
#[derive(Clone)]
pub struct SignType {
    rs: Arc<RootSystem>,
    signs: Vec<Sign>,
}

impl PartialEq for SignType {
    fn eq(&self, other: &Self) -> bool {
        self.rs.kind() == other.rs.kind() && self.signs == other.signs
    }
}

impl Eq for SignType {}

impl std::hash::Hash for SignType {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rs.kind().hash(state);
        self.signs.hash(state);
    }
}

impl fmt::Debug for SignType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignType({}, {self})", self.rs.kind())
    }
}

impl fmt::Display for SignType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            f.write_str(s.symbol())?;
        }
        Ok(())
    }
}

impl SignType {
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn is_dominant(&self) -> bool {
        !self.signs.contains(&Sign::Minus)
    }

    /// Bit set of the roots carrying `+`.
    pub fn plus_mask(&self) -> u64 {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Sign::Plus)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// `{"signs": {"[1,0]": "+", ...}}` in root order.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (root, s) in self.rs.positive_roots().iter().zip(&self.signs) {
            map.insert(root.to_string(), Value::String(s.symbol().to_string()));
        }
        let mut out = Map::new();
        out.insert("signs".into(), Value::Object(map));
        Value::Object(out)
    }
}

/// Sign type of a point; `None` if the point lies on one of the hyperplanes.
pub fn sign_type_of_point(rs: &Arc<RootSystem>, x: &[Rational64]) -> Option<SignType> {
    let mut signs = Vec::with_capacity(rs.num_positive());
    for beta in rs.positive_roots() {
        let v = crate::affine::pair_point(rs, x, beta.coeffs());
        let s = if v < Rational64::zero() {
            Sign::Minus
        } else if v > Rational64::one() {
            Sign::Plus
        } else if v > Rational64::zero() && v < Rational64::one() {
            Sign::Zero
        } else {
            return None;
        };
        signs.push(s);
    }
    Some(SignType {
        rs: Arc::clone(rs),
        signs,
    })
}

/// The sign type containing the alcove `w⁻¹(C₀)`.
pub fn sign_type_of_element(w: &AffineWeylElement) -> Result<SignType> {
    let y = w.interior_point_image();
    sign_type_of_point(w.system(), &y)
        .ok_or_else(|| Error::Internal(format!("alcove point of {w} lies on a wall")))
}

/// `+` on the ideal, `0` elsewhere.
pub fn sign_type_of_ideal(ideal: &Ideal) -> SignType {
    let rs = ideal.system();
    SignType {
        rs: Arc::clone(rs),
        signs: (0..rs.num_positive())
            .map(|i| if ideal.contains_index(i) { Sign::Plus } else { Sign::Zero })
            .collect(),
    }
}

/// Summary of a run comparing alcove sign types with ideal sign types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramSummary {
    pub system: String,
    pub dominant_elements: usize,
    pub minimal_elements: usize,
}

/// Checks `sign_type_of_element(w) = sign_type_of_ideal(first_layer_ideal(w))`
/// for every dominant element in `elements` and for the minimal element of
/// every ideal.
pub fn check_sign_type_diagram(
    rs: &Arc<RootSystem>,
    elements: &[AffineWeylElement],
) -> Result<DiagramSummary> {
    let check = |w: &AffineWeylElement| -> Result<()> {
        let from_alcove = sign_type_of_element(w)?;
        let ideal = w.first_layer_ideal()?;
        let from_ideal = sign_type_of_ideal(&ideal);
        if from_alcove != from_ideal || !from_alcove.is_dominant() {
            return Err(crate::error::Counterexample::new("alcove sign type = ideal sign type")
                .with("element", w)
                .with("word", format!("{:?}", w.reduced_word()))
                .with("alcove sign type", &from_alcove)
                .with("first layer ideal", &ideal)
                .with("ideal sign type", &from_ideal)
                .into_error());
        }
        Ok(())
    };
    let mut dominant = 0;
    for w in elements.iter().filter(|w| w.is_dominant()) {
        check(w)?;
        dominant += 1;
    }
    let ideals = enumerate_ideals(rs);
    for ideal in &ideals {
        check(&minimal_element(ideal)?)?;
    }
    Ok(DiagramSummary {
        system: rs.kind().to_string(),
        dominant_elements: dominant,
        minimal_elements: ideals.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::elements_up_to_length;
    use std::collections::HashSet;

    fn rs(code: &str) -> Arc<RootSystem> {
        RootSystem::build(code.parse().unwrap()).unwrap()
    }

    #[test]
    fn identity_and_s0() {
        let a2 = rs("A2");
        let e = AffineWeylElement::identity(&a2);
        assert_eq!(sign_type_of_element(&e).unwrap().to_string(), "000");
        let s0 = AffineWeylElement::simple_reflection(&a2, 0).unwrap();
        // roots in order α1, α2, θ
        assert_eq!(sign_type_of_element(&s0).unwrap().to_string(), "00+");
        let s1 = AffineWeylElement::simple_reflection(&a2, 1).unwrap();
        let st = sign_type_of_element(&s1).unwrap();
        assert!(!st.is_dominant());
        assert_eq!(st.signs()[0], Sign::Minus);
    }

    #[test]
    fn ideal_sign_types() {
        let g2 = rs("G2");
        assert_eq!(sign_type_of_ideal(&Ideal::zero(&g2)).to_string(), "000000");
        let top = crate::ideals::ideal_from_generator_vectors(&g2, &[vec![3, 2]]).unwrap();
        let st = sign_type_of_ideal(&top);
        assert_eq!(st.to_string(), "00000+");
        assert!(st.is_dominant());
        let all: HashSet<SignType> = enumerate_ideals(&g2).iter().map(sign_type_of_ideal).collect();
        assert_eq!(all.len(), 8);
    }

    #[test]
    fn dominant_elements_have_dominant_sign_types() {
        let a2 = rs("A2");
        for w in elements_up_to_length(&a2, 8) {
            let st = sign_type_of_element(&w).unwrap();
            assert_eq!(st.is_dominant(), w.is_dominant(), "{w}");
            if w.is_dominant() {
                assert!(crate::ideals::is_upward_closed(&a2, st.plus_mask()));
            }
        }
    }

    #[test]
    fn json_shape() {
        let a2 = rs("A2");
        let s0 = AffineWeylElement::simple_reflection(&a2, 0).unwrap();
        let v = sign_type_of_element(&s0).unwrap().to_json();
        assert_eq!(v.to_string(), r#"{"signs":{"[1,0]":"0","[0,1]":"0","[1,1]":"+"}}"#);
    }

    #[test]
    fn diagram_on_small_systems() {
        for code in ["A1", "A2", "G2"] {
            let s = rs(code);
            let els = elements_up_to_length(&s, 6);
            let summary = check_sign_type_diagram(&s, &els).unwrap();
            assert!(summary.dominant_elements > 0);
        }
    }
}
