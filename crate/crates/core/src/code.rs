//! Linear codes over F_p + vF_p and over F_p.
//!
//! A code over the ring is an (F_p + vF_p)-submodule of (F_p + vF_p)^n. Since
//! the ring splits as F_p x F_p, every such module is determined by the pair
//! of base-field codes it projects onto at v = 0 and v = 1, and |C| =
//! p^(k1 + k2). Ring codes are therefore stored canonically as that CRT pair
//! in reduced row echelon form; Euclidean duality acts componentwise and the
//! Hermitian dual (characteristic 2) is the componentwise dual with the two
//! components swapped. Codes over F_p (Gray images and their duals) use a
//! single generator matrix.

use crate::arith::{PrimeField, RingElement};
use crate::cyclic::RingPoly;
use crate::error::{Error, Result};
use crate::matrix::FpMatrix;

/// Which alphabet a code lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    /// F_p + vF_p
    Ring,
    /// F_p
    Field,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Ring { c1: FpMatrix, c2: FpMatrix },
    Field { gens: FpMatrix },
}

/// A linear code, stored by canonical generator matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: PrimeField,
    n: usize,
    repr: Repr,
}

impl LinearCode {
    /// Ring code from its two CRT component codes.
    pub fn from_crt_components(c1: FpMatrix, c2: FpMatrix) -> Result<Self> {
        if c1.field() != c2.field() {
            return Err(Error::ModulusMismatch {
                left: c1.field().p(),
                right: c2.field().p(),
            });
        }
        if c1.ncols() != c2.ncols() {
            return Err(Error::LengthMismatch {
                left: c1.ncols(),
                right: c2.ncols(),
            });
        }
        Ok(LinearCode {
            field: c1.field(),
            n: c1.ncols(),
            repr: Repr::Ring {
                c1: c1.canonical(),
                c2: c2.canonical(),
            },
        })
    }

    /// Ring code spanned (as a module) by the given rows.
    pub fn from_ring_rows(field: PrimeField, n: usize, rows: &[Vec<RingElement>]) -> Result<Self> {
        let mut r1 = Vec::with_capacity(rows.len());
        let mut r2 = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            let mut s = Vec::with_capacity(n);
            let mut t = Vec::with_capacity(n);
            for e in row {
                if e.field() != field {
                    return Err(Error::ModulusMismatch {
                        left: field.p(),
                        right: e.field().p(),
                    });
                }
                let (es, et) = e.crt_split();
                s.push(es);
                t.push(et);
            }
            r1.push(s);
            r2.push(t);
        }
        Self::from_crt_components(FpMatrix::new(field, n, r1), FpMatrix::new(field, n, r2))
    }

    /// The cyclic code (ideal) generated by an arbitrary polynomial: the
    /// module span of all n cyclic shifts.
    pub fn from_cyclic_poly(f: &RingPoly) -> Self {
        let (f0, f1) = f.crt_components();
        let c1 = FpMatrix::from_cyclic_shifts(&f0);
        let c2 = FpMatrix::from_cyclic_shifts(&f1);
        Self::from_crt_components(c1, c2).expect("components agree by construction")
    }

    /// The cyclic code generated by an idempotent of odd length. Errors when
    /// the generator is not idempotent or the length is even.
    pub fn from_cyclic_idempotent(f: &RingPoly) -> Result<Self> {
        if f.n() % 2 == 0 {
            return Err(Error::RequiresOddLength(f.n()));
        }
        if !f.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        Ok(Self::from_cyclic_poly(f))
    }

    /// Field code from generator rows.
    pub fn from_field_matrix(gens: FpMatrix) -> Self {
        LinearCode {
            field: gens.field(),
            n: gens.ncols(),
            repr: Repr::Field {
                gens: gens.canonical(),
            },
        }
    }

    pub fn zero(field: PrimeField, n: usize, alphabet: Alphabet) -> Self {
        match alphabet {
            Alphabet::Ring => {
                Self::from_crt_components(FpMatrix::empty(field, n), FpMatrix::empty(field, n))
                    .expect("matching components")
            }
            Alphabet::Field => Self::from_field_matrix(FpMatrix::empty(field, n)),
        }
    }

    pub fn full_space(field: PrimeField, n: usize, alphabet: Alphabet) -> Self {
        let id = FpMatrix::identity(field, n);
        match alphabet {
            Alphabet::Ring => Self::from_crt_components(id.clone(), id).expect("matching"),
            Alphabet::Field => Self::from_field_matrix(id),
        }
    }

    /// The ring code of all words with coordinate sum zero.
    pub fn zero_sum_hyperplane(field: PrimeField, n: usize) -> Self {
        let p = field.p();
        let rows: Vec<Vec<u32>> = (0..n - 1)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r[i + 1] = p - 1;
                r
            })
            .collect();
        let m = FpMatrix::new(field, n, rows);
        Self::from_crt_components(m.clone(), m).expect("matching")
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        match self.repr {
            Repr::Ring { .. } => Alphabet::Ring,
            Repr::Field { .. } => Alphabet::Field,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// CRT component matrices of a ring code.
    pub fn crt_components(&self) -> Option<(&FpMatrix, &FpMatrix)> {
        match &self.repr {
            Repr::Ring { c1, c2 } => Some((c1, c2)),
            Repr::Field { .. } => None,
        }
    }

    /// Generator matrix of a field code.
    pub fn field_generators(&self) -> Option<&FpMatrix> {
        match &self.repr {
            Repr::Field { gens } => Some(gens),
            Repr::Ring { .. } => None,
        }
    }

    /// log_p of the cardinality: k1 + k2 for ring codes, k for field codes.
    pub fn card_exponent(&self) -> usize {
        match &self.repr {
            Repr::Ring { c1, c2 } => c1.nrows() + c2.nrows(),
            Repr::Field { gens } => gens.nrows(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.card_exponent() == 0
    }

    /// A module generating set for a ring code: (1-v) rows of the first
    /// component followed by v rows of the second.
    pub fn ring_generators(&self) -> Result<Vec<Vec<RingElement>>> {
        let (c1, c2) = self.crt_components().ok_or(Error::AlphabetMismatch)?;
        let f = self.field;
        let mut out = Vec::with_capacity(c1.nrows() + c2.nrows());
        for row in c1.rows() {
            out.push(
                row.iter()
                    .map(|&s| RingElement::crt_join(f, s, 0))
                    .collect(),
            );
        }
        for row in c2.rows() {
            out.push(
                row.iter()
                    .map(|&t| RingElement::crt_join(f, 0, t))
                    .collect(),
            );
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.alphabet() != other.alphabet() || self.field != other.field {
            return Err(Error::AlphabetMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Orthogonal complement under the Euclidean inner product. For ring
    /// codes this is the componentwise dual; |C| * |dual| = |R|^n holds by
    /// rank-nullity on each component.
    pub fn euclidean_dual(&self) -> Self {
        match &self.repr {
            Repr::Ring { c1, c2 } => LinearCode {
                field: self.field,
                n: self.n,
                repr: Repr::Ring {
                    c1: c1.nullspace().canonical(),
                    c2: c2.nullspace().canonical(),
                },
            },
            Repr::Field { gens } => LinearCode {
                field: self.field,
                n: self.n,
                repr: Repr::Field {
                    gens: gens.nullspace().canonical(),
                },
            },
        }
    }

    /// Orthogonal complement under the Hermitian inner product
    /// sum x_i * conj(y_i) in characteristic 2. Conjugation swaps the CRT
    /// components, so the dual is the componentwise dual with components
    /// exchanged.
    pub fn hermitian_dual(&self) -> Result<Self> {
        if self.field.p() != 2 {
            return Err(Error::RequiresCharTwo(self.field.p()));
        }
        let (c1, c2) = self.crt_components().ok_or(Error::AlphabetMismatch)?;
        Ok(LinearCode {
            field: self.field,
            n: self.n,
            repr: Repr::Ring {
                c1: c2.nullspace().canonical(),
                c2: c1.nullspace().canonical(),
            },
        })
    }

    /// Set-level equality (canonical forms are compared).
    pub fn code_equal(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self == other)
    }

    /// Membership test for a ring word.
    pub fn contains_ring(&self, word: &[RingElement]) -> Result<bool> {
        let (c1, c2) = self.crt_components().ok_or(Error::AlphabetMismatch)?;
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: word.len(),
            });
        }
        let mut s = Vec::with_capacity(self.n);
        let mut t = Vec::with_capacity(self.n);
        for e in word {
            let (es, et) = e.crt_split();
            s.push(es);
            t.push(et);
        }
        Ok(c1.row_space_contains(&s) && c2.row_space_contains(&t))
    }

    /// Membership test for a field word.
    pub fn contains_field(&self, word: &[u32]) -> Result<bool> {
        let gens = self.field_generators().ok_or(Error::AlphabetMismatch)?;
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: word.len(),
            });
        }
        Ok(gens.row_space_contains(word))
    }

    /// The smallest code containing both operands.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Ring { c1: a1, c2: a2 }, Repr::Ring { c1: b1, c2: b2 }) => {
                Self::from_crt_components(a1.stacked(b1), a2.stacked(b2))
            }
            (Repr::Field { gens: a }, Repr::Field { gens: b }) => {
                Ok(Self::from_field_matrix(a.stacked(b)))
            }
            _ => Err(Error::AlphabetMismatch),
        }
    }

    /// Intersection, computed as the dual of the sum of duals.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let d = self.euclidean_dual().sum(&other.euclidean_dual())?;
        Ok(d.euclidean_dual())
    }

    /// Coordinate permutation i -> a*i mod n applied to all generators.
    /// Requires gcd(a, n) = 1.
    pub fn permute(&self, a: u64) -> Result<Self> {
        let n = self.n as u64;
        if gcd(a % n, n) != 1 {
            return Err(Error::NotAUnit { a, n });
        }
        let perm: Vec<usize> = (0..self.n)
            .map(|i| ((a % n) * i as u64 % n) as usize)
            .collect();
        Ok(match &self.repr {
            Repr::Ring { c1, c2 } => LinearCode {
                field: self.field,
                n: self.n,
                repr: Repr::Ring {
                    c1: c1.permute_cols(&perm).canonical(),
                    c2: c2.permute_cols(&perm).canonical(),
                },
            },
            Repr::Field { gens } => LinearCode {
                field: self.field,
                n: self.n,
                repr: Repr::Field {
                    gens: gens.permute_cols(&perm).canonical(),
                },
            },
        })
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.euclidean_dual()
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let dual = self.euclidean_dual();
        match (&self.repr, &dual.repr) {
            (Repr::Ring { c1, c2 }, Repr::Ring { c1: d1, c2: d2 }) => {
                c1.rows().iter().all(|r| d1.row_space_contains(r))
                    && c2.rows().iter().all(|r| d2.row_space_contains(r))
            }
            (Repr::Field { gens }, Repr::Field { gens: d }) => {
                gens.rows().iter().all(|r| d.row_space_contains(r))
            }
            _ => unreachable!("dual preserves alphabet"),
        }
    }

    pub fn is_hermitian_self_dual(&self) -> Result<bool> {
        Ok(*self == self.hermitian_dual()?)
    }

    /// All codewords of a ring code, for small-code oracles. Panics if the
    /// code has more than 2^20 words; enumeration at scale lives in
    /// [`crate::analysis`].
    pub fn ring_codewords(&self) -> Result<Vec<Vec<RingElement>>> {
        let (c1, c2) = self.crt_components().ok_or(Error::AlphabetMismatch)?;
        let p = self.field.p() as u64;
        let k = (c1.nrows() + c2.nrows()) as u32;
        let total = p
            .checked_pow(k)
            .filter(|&t| t <= 1 << 20)
            .expect("code too large to enumerate");
        let f = self.field;
        let mut out = Vec::with_capacity(total as usize);
        let words1 = field_words(c1);
        let words2 = field_words(c2);
        for s in &words1 {
            for t in &words2 {
                out.push(
                    s.iter()
                        .zip(t)
                        .map(|(&si, &ti)| RingElement::crt_join(f, si, ti))
                        .collect(),
                );
            }
        }
        Ok(out)
    }
}

/// All words of a field code given by a canonical matrix. Test/oracle scale.
pub(crate) fn field_words(gens: &FpMatrix) -> Vec<Vec<u32>> {
    let f = gens.field();
    let p = f.p() as u64;
    let k = gens.nrows() as u32;
    let total = p
        .checked_pow(k)
        .filter(|&t| t <= 1 << 20)
        .expect("too many words");
    let n = gens.ncols();
    let mut out = Vec::with_capacity(total as usize);
    for mut idx in 0..total {
        let mut w = vec![0u32; n];
        for row in gens.rows() {
            let d = (idx % p) as u32;
            idx /= p;
            if d != 0 {
                for (wj, &rj) in w.iter_mut().zip(row) {
                    *wj = f.add(*wj, f.mul(d, rj));
                }
            }
        }
        out.push(w);
    }
    out
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::FpPoly;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn repetition_code_from_all_ones() {
        let h = FpPoly::all_ones(f(2), 7);
        let code = LinearCode::from_cyclic_poly(&RingPoly::from_crt(&h, &h).unwrap());
        assert_eq!(code.card_exponent(), 2); // 4 ring multiples of the all-ones word
        let words = code.ring_codewords().unwrap();
        assert_eq!(words.len(), 4);
    }

    #[test]
    fn full_space_from_one() {
        let one = RingPoly::monomial(f(3), 5, 0);
        let code = LinearCode::from_cyclic_idempotent(&one).unwrap();
        assert_eq!(code, LinearCode::full_space(f(3), 5, Alphabet::Ring));
    }

    #[test]
    fn from_cyclic_idempotent_rejects_non_idempotent() {
        let x = RingPoly::monomial(f(2), 7, 1);
        assert_eq!(
            LinearCode::from_cyclic_idempotent(&x).unwrap_err(),
            Error::NotIdempotent
        );
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let full = LinearCode::full_space(f(3), 4, Alphabet::Ring);
        assert_eq!(
            full.euclidean_dual(),
            LinearCode::zero(f(3), 4, Alphabet::Ring)
        );
    }

    #[test]
    fn dual_cardinalities_multiply() {
        for p in [2u32, 3] {
            let field = f(p);
            let h = FpPoly::all_ones(field, 5);
            let code = LinearCode::from_cyclic_poly(
                &RingPoly::from_crt(&h, &FpPoly::zero(field, 5)).unwrap(),
            );
            let dual = code.euclidean_dual();
            assert_eq!(code.card_exponent() + dual.card_exponent(), 2 * 5);
            assert_eq!(dual.euclidean_dual(), code);
        }
    }

    #[test]
    fn all_v_code_is_hermitian_self_orthogonal() {
        // <vh>: v * conj(v) = v(1+v) = 0
        let field = f(2);
        let zero = FpPoly::zero(field, 7);
        let h = FpPoly::all_ones(field, 7);
        let vh = RingPoly::from_crt(&zero, &h).unwrap();
        let code = LinearCode::from_cyclic_poly(&vh);
        let hd = code.hermitian_dual().unwrap();
        for row in code.ring_generators().unwrap() {
            assert!(hd.contains_ring(&row).unwrap());
        }
    }

    #[test]
    fn permutation_examples() {
        let field = f(2);
        let e1 = FpPoly::from_support(field, 7, &[1, 2, 4], 1);
        let e2 = FpPoly::from_support(field, 7, &[3, 5, 6], 1);
        let q = LinearCode::from_cyclic_poly(&RingPoly::from_crt(&e1, &e2).unwrap());
        assert_eq!(q.permute(1).unwrap(), q);
        assert_eq!(q.permute(2).unwrap().permute(4).unwrap(), q);
        assert!(q.permute(7).is_err());
    }

    #[test]
    fn hyperplane_has_codimension_two() {
        let hp = LinearCode::zero_sum_hyperplane(f(3), 5);
        assert_eq!(hp.card_exponent(), 2 * 4);
    }
}
