//! Arithmetic in the prime field F_p and in the ring R = F_p + vF_p with v^2 = v.
//!
//! The ring is commutative of order p^2 and splits as F_p x F_p through
//! evaluation at v = 0 and v = 1 (the CRT components). Elements are kept as
//! canonical pairs (a, b) with both entries reduced mod p, so values are
//! directly hashable and comparable during enumeration.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Deterministic primality test for the small moduli this crate works with.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field F_p. Construction checks primality once; all element
/// values handled by the struct are kept in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            exp >>= 1;
            base = self.mul(base, base);
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }

    /// Reduce an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn reduce_i64(self, x: i64) -> u32 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u32
    }
}

/// Smallest square root of `a` modulo p, or `None` when `a` is a non-residue.
///
/// Exhaustive scan; the moduli in play never exceed a few dozen, so anything
/// cleverer would be noise.
pub fn sqrt_mod_p(field: PrimeField, a: u32) -> Option<u32> {
    let a = a % field.p();
    (0..field.p()).find(|&r| field.mul(r, r) == a)
}

/// Euler's criterion: is `a` a square modulo the odd prime `q`?
///
/// Errors when `q` is not an odd prime or `a` is divisible by `q`.
pub fn is_qr_mod(a: u64, q: u64) -> Result<bool> {
    if q < 3 || !is_prime(q) {
        return Err(Error::NotQrSetting {
            reason: format!("{q} is not an odd prime"),
        });
    }
    if a % q == 0 {
        return Err(Error::ZeroResidue);
    }
    let mut acc = 1u64;
    let mut base = a % q;
    let mut exp = (q - 1) / 2;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        exp >>= 1;
        base = base * base % q;
    }
    Ok(acc == 1)
}

/// An element a + bv of F_p + vF_p, stored as the canonical pair (a, b).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    a: u32,
    b: u32,
    p: u32,
}

impl RingElement {
    pub fn new(field: PrimeField, a: u32, b: u32) -> Self {
        RingElement {
            a: a % field.p(),
            b: b % field.p(),
            p: field.p(),
        }
    }

    pub fn zero(field: PrimeField) -> Self {
        Self::new(field, 0, 0)
    }

    pub fn one(field: PrimeField) -> Self {
        Self::new(field, 1, 0)
    }

    /// The ring generator v itself.
    pub fn v(field: PrimeField) -> Self {
        Self::new(field, 0, 1)
    }

    /// The unit 1 - 2v, which squares to 1 in every characteristic.
    pub fn one_minus_two_v(field: PrimeField) -> Self {
        Self::new(field, 1, field.neg(2 % field.p()))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    #[inline]
    pub fn coeffs(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn check_same(&self, rhs: &Self) -> Result<PrimeField> {
        if self.p != rhs.p {
            return Err(Error::ModulusMismatch {
                left: self.p,
                right: rhs.p,
            });
        }
        Ok(self.field())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        let f = self.check_same(rhs)?;
        Ok(RingElement {
            a: f.add(self.a, rhs.a),
            b: f.add(self.b, rhs.b),
            p: self.p,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        let f = self.check_same(rhs)?;
        Ok(RingElement {
            a: f.sub(self.a, rhs.a),
            b: f.sub(self.b, rhs.b),
            p: self.p,
        })
    }

    pub fn neg(&self) -> Self {
        let f = self.field();
        RingElement {
            a: f.neg(self.a),
            b: f.neg(self.b),
            p: self.p,
        }
    }

    /// (a1 + b1 v)(a2 + b2 v) = a1 a2 + (a1 b2 + a2 b1 + b1 b2) v, using v^2 = v.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let f = self.check_same(rhs)?;
        Ok(self.mul_in(f, rhs))
    }

    #[inline]
    pub(crate) fn mul_in(&self, f: PrimeField, rhs: &Self) -> Self {
        let a = f.mul(self.a, rhs.a);
        let b = f.add(
            f.add(f.mul(self.a, rhs.b), f.mul(self.b, rhs.a)),
            f.mul(self.b, rhs.b),
        );
        RingElement { a, b, p: self.p }
    }

    pub fn scalar_mul(&self, c: u32) -> Self {
        let f = self.field();
        RingElement {
            a: f.mul(self.a, c % self.p),
            b: f.mul(self.b, c % self.p),
            p: self.p,
        }
    }

    /// CRT components: evaluation at v = 0 and at v = 1.
    #[inline]
    pub fn crt_split(&self) -> (u32, u32) {
        (self.a, self.field().add(self.a, self.b))
    }

    /// Inverse of [`crt_split`](Self::crt_split): (1 - v) s + v t.
    pub fn crt_join(field: PrimeField, s: u32, t: u32) -> Self {
        let s = s % field.p();
        let t = t % field.p();
        RingElement {
            a: s,
            b: field.sub(t, s),
            p: field.p(),
        }
    }

    /// An element is a unit exactly when both CRT components are non-zero.
    pub fn is_unit(&self) -> bool {
        let (s, t) = self.crt_split();
        s != 0 && t != 0
    }

    /// Hermitian conjugation for characteristic 2: fixes 0 and 1, swaps v and 1 + v.
    pub fn hermitian_conj(&self) -> Result<Self> {
        if self.p != 2 {
            return Err(Error::RequiresCharTwo(self.p));
        }
        Ok(RingElement {
            a: (self.a + self.b) % 2,
            b: self.b,
            p: 2,
        })
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "v"),
            (0, b) => write!(f, "{b}v"),
            (a, 1) => write!(f, "{a}+v"),
            (a, b) => write!(f, "{a}+{b}v"),
        }
    }
}

impl FromStr for RingElement {
    type Err = Error;

    /// Parses the text form `a+bv`, with zero parts omitted: `0`, `2`, `v`,
    /// `2v`, `1+v`, `1+2v`. The modulus is not encoded in the text, so the
    /// result carries the largest coefficient seen; use
    /// [`parse_ring_element`] to parse against a known field.
    fn from_str(s: &str) -> Result<Self> {
        // Without a field the text alone cannot determine p; default to the
        // smallest prime that fits the coefficients. Primarily a convenience
        // for tests; CLI paths go through parse_ring_element.
        let (a, b) = parse_parts(s)?;
        let mut p = 2u32;
        while p <= a.max(b) {
            p += 1;
            while !is_prime(p as u64) {
                p += 1;
            }
        }
        Ok(RingElement::new(PrimeField::new(p)?, a, b))
    }
}

/// Parse the `a+bv` text form against a known field.
pub fn parse_ring_element(field: PrimeField, s: &str) -> Result<RingElement> {
    let (a, b) = parse_parts(s)?;
    Ok(RingElement::new(field, a, b))
}

fn parse_parts(s: &str) -> Result<(u32, u32)> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Internal("empty ring element".into()));
    }
    let bad = || Error::Internal(format!("cannot parse ring element {s:?}"));
    let parse_term = |t: &str| -> Result<(u32, bool)> {
        // returns (coefficient, has_v)
        let t = t.trim();
        if let Some(num) = t.strip_suffix('v') {
            let num = num.trim();
            if num.is_empty() {
                Ok((1, true))
            } else {
                Ok((num.parse::<u32>().map_err(|_| bad())?, true))
            }
        } else {
            Ok((t.parse::<u32>().map_err(|_| bad())?, false))
        }
    };
    let mut a = 0u32;
    let mut b = 0u32;
    for part in s.split('+') {
        let (c, has_v) = parse_term(part)?;
        if has_v {
            b = b.checked_add(c).ok_or_else(bad)?;
        } else {
            a = a.checked_add(c).ok_or_else(bad)?;
        }
    }
    Ok((a, b))
}
