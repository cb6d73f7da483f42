//! Quadratic residue codes over F_p + vF_p.
//!
//! For an odd prime q with p a square mod q, the four codes of length q are
//! generated by the idempotents (1-v)a + vb, (1-v)b + va, (1-v)a' + vb' and
//! (1-v)b' + va', where a, b generate the two [q, (q+1)/2] cyclic codes over
//! F_p attached to the residue classes and a' = 1 - b, b' = 1 - a generate
//! the [q, (q-1)/2] pair. The base idempotents are found by searching the
//! three-dimensional subalgebra spanned by 1, e1, e2: all p^3 candidate
//! coefficient triples are tested for idempotency, the target dimension, and
//! being moved by a non-residue multiplier. Exactly two survive and the
//! multiplier swaps them; the one with the lexicographically smaller triple
//! is labelled `a`.

use crate::arith::{is_prime, is_qr_mod, sqrt_mod_p, PrimeField, RingElement};
use crate::code::LinearCode;
use crate::cyclic::{FpPoly, RingPoly};
use crate::error::{Error, Result};
use crate::matrix::FpMatrix;

/// Selector for the four codes of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QrCode {
    Q1,
    Q2,
    Q1Prime,
    Q2Prime,
}

impl QrCode {
    pub fn is_big(self) -> bool {
        matches!(self, QrCode::Q1 | QrCode::Q2)
    }
}

/// Which constant vector augments a small QR code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AugmentUnit {
    /// the all-v vector, the polynomial v*h
    V,
    /// the all-(1+v) vector, the polynomial (1+v)*h
    OnePlusV,
}

/// Partition of {1, .., q-1} into squares and non-squares mod q.
pub fn residue_sets(q: u32) -> Result<(Vec<u32>, Vec<u32>)> {
    if q < 3 || !is_prime(q as u64) {
        return Err(Error::NotQrSetting {
            reason: format!("{q} is not an odd prime"),
        });
    }
    let mut qset = Vec::new();
    let mut nset = Vec::new();
    for i in 1..q {
        if is_qr_mod(i as u64, q as u64)? {
            qset.push(i);
        } else {
            nset.push(i);
        }
    }
    Ok((qset, nset))
}

/// Indicator polynomials of the residue and non-residue sets over F_p.
pub fn e_polys(field: PrimeField, q: u32) -> Result<(FpPoly, FpPoly)> {
    let (qset, nset) = residue_sets(q)?;
    let qs: Vec<usize> = qset.iter().map(|&i| i as usize).collect();
    let ns: Vec<usize> = nset.iter().map(|&i| i as usize).collect();
    Ok((
        FpPoly::from_support(field, q as usize, &qs, 1),
        FpPoly::from_support(field, q as usize, &ns, 1),
    ))
}

fn check_qr_setting(p: u32, q: u32) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::NotQrSetting {
            reason: format!("p = {p} is not prime"),
        });
    }
    if q < 3 || !is_prime(q as u64) {
        return Err(Error::NotQrSetting {
            reason: format!("q = {q} is not an odd prime"),
        });
    }
    if p == q {
        return Err(Error::NotQrSetting {
            reason: format!("p and q must be distinct, got {p}"),
        });
    }
    if !is_qr_mod(p as u64, q as u64)? {
        return Err(Error::NotQrSetting {
            reason: format!("p = {p} must be a quadratic residue modulo q = {q}"),
        });
    }
    Ok(())
}

/// A generating idempotent c0 + c1 e1 + c2 e2 found by the search, with its
/// coefficient triple.
#[derive(Debug, Clone)]
pub struct BaseIdempotent {
    pub triple: (u32, u32, u32),
    pub poly: FpPoly,
}

/// The two idempotents of `F_p[x]/(x^q - 1)` generating `[q, (q+1)/2]` codes,
/// found by exhaustive search over the subalgebra spanned by 1, e1, e2.
/// The first entry carries the lexicographically smaller triple; the
/// non-residue multiplier maps each onto the other.
pub fn base_idempotents(field: PrimeField, q: u32) -> Result<(BaseIdempotent, BaseIdempotent)> {
    check_qr_setting(field.p(), q)?;
    let (e1, e2) = e_polys(field, q)?;
    let (_, nset) = residue_sets(q)?;
    let n0 = nset[0] as u64;
    let p = field.p();
    let n = q as usize;
    let target = (n + 1) / 2;
    let mut found = Vec::new();
    for c0 in 0..p {
        for c1 in 0..p {
            for c2 in 0..p {
                let f = FpPoly::one(field, n)
                    .scale(c0)
                    .add(&e1.scale(c1))
                    .unwrap()
                    .add(&e2.scale(c2))
                    .unwrap();
                if !f.is_idempotent() {
                    continue;
                }
                if f.mu_map(n0).unwrap() == f {
                    continue;
                }
                if FpMatrix::from_cyclic_shifts(&f).rank() != target {
                    continue;
                }
                found.push(((c0, c1, c2), f));
            }
        }
    }
    if found.len() != 2 {
        return Err(Error::Internal(format!(
            "expected exactly 2 generating idempotents for (p, q) = ({p}, {q}), found {}",
            found.len()
        )));
    }
    found.sort_by_key(|(t, _)| *t);
    let (tb, fb) = found.pop().unwrap();
    let (ta, fa) = found.pop().unwrap();
    if fa.mu_map(n0).unwrap() != fb {
        return Err(Error::Internal(
            "generating idempotents are not swapped by the non-residue multiplier".into(),
        ));
    }
    Ok((
        BaseIdempotent {
            triple: ta,
            poly: fa,
        },
        BaseIdempotent {
            triple: tb,
            poly: fb,
        },
    ))
}

/// The small-code idempotents a' = 1 - b and b' = 1 - a.
pub fn small_idempotents(a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
    let one = FpPoly::one(a.field(), a.n());
    (one.sub(b).unwrap(), one.sub(a).unwrap())
}

/// The assembled data of one (p, q) family.
#[derive(Debug, Clone)]
pub struct QRFamily {
    pub p: u32,
    pub q: u32,
    pub field: PrimeField,
    pub qset: Vec<u32>,
    pub nset: Vec<u32>,
    pub e1: FpPoly,
    pub e2: FpPoly,
    /// The all-ones polynomial 1 + e1 + e2.
    pub h: FpPoly,
    pub a: FpPoly,
    pub b: FpPoly,
    pub a_small: FpPoly,
    pub b_small: FpPoly,
    pub a_triple: (u32, u32, u32),
    pub b_triple: (u32, u32, u32),
    pub idem_q1: RingPoly,
    pub idem_q2: RingPoly,
    pub idem_q1p: RingPoly,
    pub idem_q2p: RingPoly,
}

/// Builds the residue sets, base idempotents and the four ring idempotents
/// for a (p, q) pair.
pub fn qr_family(p: u32, q: u32) -> Result<QRFamily> {
    check_qr_setting(p, q)?;
    let field = PrimeField::new(p)?;
    let (qset, nset) = residue_sets(q)?;
    let (e1, e2) = e_polys(field, q)?;
    let h = FpPoly::all_ones(field, q as usize);
    let (big_a, big_b) = base_idempotents(field, q)?;
    let (a_triple, a) = (big_a.triple, big_a.poly);
    let (b_triple, b) = (big_b.triple, big_b.poly);
    let (a_small, b_small) = small_idempotents(&a, &b);
    let idem_q1 = RingPoly::from_crt(&a, &b)?;
    let idem_q2 = RingPoly::from_crt(&b, &a)?;
    let idem_q1p = RingPoly::from_crt(&a_small, &b_small)?;
    let idem_q2p = RingPoly::from_crt(&b_small, &a_small)?;
    Ok(QRFamily {
        p,
        q,
        field,
        qset,
        nset,
        e1,
        e2,
        h,
        a,
        b,
        a_small,
        b_small,
        a_triple,
        b_triple,
        idem_q1,
        idem_q2,
        idem_q1p,
        idem_q2p,
    })
}

impl QRFamily {
    pub fn idempotent(&self, which: QrCode) -> &RingPoly {
        match which {
            QrCode::Q1 => &self.idem_q1,
            QrCode::Q2 => &self.idem_q2,
            QrCode::Q1Prime => &self.idem_q1p,
            QrCode::Q2Prime => &self.idem_q2p,
        }
    }

    /// The code generated by the selected idempotent.
    pub fn code(&self, which: QrCode) -> LinearCode {
        LinearCode::from_cyclic_poly(self.idempotent(which))
    }

    /// The all-ones cyclic code as a ring code.
    pub fn h_code(&self) -> LinearCode {
        let hp = RingPoly::from_crt(&self.h, &self.h).expect("same field");
        LinearCode::from_cyclic_poly(&hp)
    }

    /// The entry written in the new column of the last generator row of the
    /// extension: a square root r of -q when q = 3 mod 4 (the smaller of the
    /// two roots), or 1 for Q1 and -q for Q2 when q = 1 mod 4.
    pub fn extension_entry(&self, which: QrCode) -> Result<u32> {
        if !which.is_big() {
            return Err(Error::NotQrSetting {
                reason: "only Q1 and Q2 have extensions".into(),
            });
        }
        let f = self.field;
        let minus_q = f.neg(self.q % self.p);
        if self.q % 4 == 3 {
            sqrt_mod_p(f, minus_q).ok_or_else(|| {
                Error::Internal(format!(
                    "-q must be a square mod p for q = 3 mod 4, got (p, q) = ({}, {})",
                    self.p, self.q
                ))
            })
        } else {
            Ok(match which {
                QrCode::Q1 => 1,
                QrCode::Q2 => minus_q,
                _ => unreachable!(),
            })
        }
    }

    /// Generator rows of the extended code: the column at infinity is
    /// prepended, the first (q-1)/2 rows are cyclic shifts of the small-code
    /// idempotent with 0 at infinity, and the last row is (g | 1 1 .. 1).
    pub fn extension_rows(&self, which: QrCode) -> Result<Vec<Vec<RingElement>>> {
        let g = self.extension_entry(which)?;
        let small = match which {
            QrCode::Q1 => &self.idem_q1p,
            QrCode::Q2 => &self.idem_q2p,
            _ => unreachable!("extension_entry rejects small codes"),
        };
        let f = self.field;
        let q = self.q as usize;
        let zero = RingElement::zero(f);
        let one = RingElement::one(f);
        let mut rows = Vec::with_capacity((q - 1) / 2 + 1);
        for i in 0..(q - 1) / 2 {
            let mut row = Vec::with_capacity(q + 1);
            row.push(zero);
            row.extend(small.shifted(i));
            rows.push(row);
        }
        let mut last = vec![one; q + 1];
        last[0] = RingElement::new(f, g, 0);
        rows.push(last);
        Ok(rows)
    }

    /// The extended code of Q1 or Q2.
    pub fn extend(&self, which: QrCode) -> Result<LinearCode> {
        let rows = self.extension_rows(which)?;
        LinearCode::from_ring_rows(self.field, self.q as usize + 1, &rows)
    }

    /// Idempotent generator of `Q' + <vh>` or `Q' + <(1+v)h>`, combined through
    /// f + g - fg. Requires p = 2 and q = 1 mod 8.
    pub fn augment_idempotent(&self, which: QrCode, unit: AugmentUnit) -> Result<RingPoly> {
        if self.p != 2 || self.q % 8 != 1 {
            return Err(Error::AugmentUnsupported {
                p: self.p,
                q: self.q,
            });
        }
        if which.is_big() {
            return Err(Error::NotQrSetting {
                reason: "augmentation applies to Q1' and Q2'".into(),
            });
        }
        let f = self.idempotent(which);
        let zero = FpPoly::zero(self.field, self.q as usize);
        let g = match unit {
            AugmentUnit::V => RingPoly::from_crt(&zero, &self.h)?,
            AugmentUnit::OnePlusV => RingPoly::from_crt(&self.h, &zero)?,
        };
        let fg = f.cyclic_mul(&g)?;
        f.add(&g)?.sub(&fg)
    }

    /// The augmented code `Q' + <vh>` or `Q' + <(1+v)h>`.
    pub fn hermitian_augment(&self, which: QrCode, unit: AugmentUnit) -> Result<LinearCode> {
        let idem = self.augment_idempotent(which, unit)?;
        LinearCode::from_cyclic_idempotent(&idem)
    }

    /// Display rows for the cyclic codes: (q+1)/2 shifts of the idempotent
    /// for the big pair, (q-1)/2 for the small pair. The first k shifts of a
    /// generator of a k-dimensional cyclic component are always independent,
    /// so these rows span the code as a module.
    pub fn generator_rows(&self, which: QrCode) -> Vec<Vec<RingElement>> {
        let idem = self.idempotent(which);
        let q = self.q as usize;
        let count = if which.is_big() {
            (q + 1) / 2
        } else {
            (q - 1) / 2
        };
        (0..count).map(|i| idem.shifted(i)).collect()
    }
}
