//! Gray maps into F_p^{2n} and the Hamming, Lee and Bachoc weights.
//!
//! Odd characteristic maps a + bv to (-b, 2a + b); characteristic 2 maps it
//! to (a, a + b). The Lee weight of a ring word is by definition the Hamming
//! weight of its Gray image. Images are laid out in two blocks (all first
//! components, then all second components); the two possible layouts differ
//! by a fixed coordinate permutation and share all weight data.

use crate::arith::{PrimeField, RingElement};
use crate::code::{Alphabet, LinearCode};
use crate::error::{Error, Result};
use crate::matrix::FpMatrix;
use serde::Serialize;
use std::fmt;

/// Which weight function to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    Hamming,
    Lee,
    Bachoc,
}

impl WeightKind {
    pub fn valid_for(self, field: PrimeField, alphabet: Alphabet) -> Result<()> {
        match (self, alphabet) {
            (WeightKind::Hamming, _) => Ok(()),
            (WeightKind::Lee, Alphabet::Ring) => Ok(()),
            (WeightKind::Bachoc, Alphabet::Ring) if field.p() == 2 => Ok(()),
            (WeightKind::Bachoc, Alphabet::Ring) => Err(Error::WeightUnsupported(format!(
                "the Bachoc weight is defined for p = 2, got p = {}",
                field.p()
            ))),
            _ => Err(Error::WeightUnsupported(format!(
                "{self} weight needs a ring code"
            ))),
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightKind::Hamming => write!(f, "hamming"),
            WeightKind::Lee => write!(f, "lee"),
            WeightKind::Bachoc => write!(f, "bachoc"),
        }
    }
}

impl std::str::FromStr for WeightKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hamming" => Ok(WeightKind::Hamming),
            "lee" => Ok(WeightKind::Lee),
            "bachoc" => Ok(WeightKind::Bachoc),
            other => Err(Error::WeightUnsupported(format!(
                "unknown weight {other:?}"
            ))),
        }
    }
}

/// Weight of a single ring element.
pub fn symbol_weight(x: &RingElement, kind: WeightKind) -> Result<u32> {
    let p = x.field().p();
    let (a, b) = x.coeffs();
    match kind {
        WeightKind::Hamming => Ok(u32::from(!x.is_zero())),
        WeightKind::Lee => {
            if p == 2 {
                // w_L(0) = 0, w_L(1) = 2, w_L(v) = 1, w_L(1+v) = 1
                Ok(match (a, b) {
                    (0, 0) => 0,
                    (1, 0) => 2,
                    _ => 1,
                })
            } else {
                let two_a_plus_b = x.field().add(x.field().add(a, a), b);
                Ok(match (a, b) {
                    (0, 0) => 0,
                    (_, 0) => 1,
                    _ if two_a_plus_b == 0 => 1,
                    _ => 2,
                })
            }
        }
        WeightKind::Bachoc => {
            if p != 2 {
                return Err(Error::WeightUnsupported(
                    "the Bachoc weight is defined for p = 2".into(),
                ));
            }
            // w_B(0) = 0, w_B(1) = 1, w_B(v) = w_B(1+v) = 2
            Ok(match (a, b) {
                (0, 0) => 0,
                (1, 0) => 1,
                _ => 2,
            })
        }
    }
}

/// Weight of a ring word: the sum of its per-coordinate weights.
pub fn word_weight(word: &[RingElement], kind: WeightKind) -> Result<usize> {
    let mut total = 0usize;
    for x in word {
        total += symbol_weight(x, kind)? as usize;
    }
    Ok(total)
}

/// Gray map for odd p: block of -b coordinates, then block of 2a + b.
pub fn gray_odd(word: &[RingElement]) -> Result<Vec<u32>> {
    let mut first = Vec::with_capacity(word.len());
    let mut second = Vec::with_capacity(word.len());
    for x in word {
        let f = x.field();
        if f.p() == 2 {
            return Err(Error::RequiresOddChar);
        }
        let (a, b) = x.coeffs();
        first.push(f.neg(b));
        second.push(f.add(f.add(a, a), b));
    }
    first.extend(second);
    Ok(first)
}

/// Gray map for p = 2: block of a coordinates, then block of a + b.
pub fn gray_binary(word: &[RingElement]) -> Result<Vec<u32>> {
    let mut first = Vec::with_capacity(word.len());
    let mut second = Vec::with_capacity(word.len());
    for x in word {
        let f = x.field();
        if f.p() != 2 {
            return Err(Error::RequiresCharTwo(f.p()));
        }
        let (a, b) = x.coeffs();
        first.push(a);
        second.push((a + b) % 2);
    }
    first.extend(second);
    Ok(first)
}

/// Gray map dispatching on the characteristic.
pub fn gray_map(word: &[RingElement]) -> Result<Vec<u32>> {
    match word.first() {
        None => Ok(Vec::new()),
        Some(x) if x.field().p() == 2 => gray_binary(word),
        Some(_) => gray_odd(word),
    }
}

/// The F_p-linear image of a ring code under the Gray map: the span of the
/// images of the module generators together with the images of their
/// v-multiples (the map is only F_p-linear, so both are needed).
pub fn gray_image_code(code: &LinearCode) -> Result<LinearCode> {
    let field = code.field();
    let gens = code.ring_generators()?;
    let v = RingElement::v(field);
    let mut rows = Vec::with_capacity(2 * gens.len());
    for g in &gens {
        rows.push(gray_map(g)?);
        let vg: Vec<RingElement> = g.iter().map(|x| x.mul_in(field, &v)).collect();
        let img = gray_map(&vg)?;
        if img.iter().any(|&x| x != 0) {
            rows.push(img);
        }
    }
    let m = FpMatrix::new(field, 2 * code.len(), rows);
    Ok(LinearCode::from_field_matrix(m))
}

/// Euclidean inner product of two ring words.
pub fn euclidean_inner(x: &[RingElement], y: &[RingElement]) -> Result<RingElement> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let Some(first) = x.first() else {
        return Err(Error::Internal("inner product of empty words".into()));
    };
    let mut acc = RingElement::zero(first.field());
    for (a, b) in x.iter().zip(y) {
        acc = acc.add(&a.mul(b)?)?;
    }
    Ok(acc)
}

/// Hermitian inner product sum x_i * conj(y_i); characteristic 2 only.
pub fn hermitian_inner(x: &[RingElement], y: &[RingElement]) -> Result<RingElement> {
    let conj: Vec<RingElement> = y
        .iter()
        .map(|e| e.hermitian_conj())
        .collect::<Result<_>>()?;
    euclidean_inner(x, &conj)
}
