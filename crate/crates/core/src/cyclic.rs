//! Arithmetic in `R_{p,n} = (F_p + vF_p)[x]/(x^n - 1)` and in the base
//! quotient `F_p[x]/(x^n - 1)`: cyclic convolution, idempotency, multiplier
//! permutations mu_a, reciprocal polynomials, and the substitution
//! x -> (1-2v)x that maps R_{p,n} onto `S_n = (F_p + vF_p)[x]/(x^n - (1-2v))`
//! for odd n.

use crate::arith::{parse_ring_element, PrimeField, RingElement};
use crate::error::{Error, Result};
use std::fmt;

/// A polynomial in `F_p[x]/(x^n - 1)`, dense coefficients lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    coeffs: Vec<u32>,
    field: PrimeField,
}

impl FpPoly {
    pub fn new(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let p = field.p();
        FpPoly {
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
            field,
        }
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        FpPoly {
            coeffs: vec![0; n],
            field,
        }
    }

    pub fn one(field: PrimeField, n: usize) -> Self {
        let mut c = vec![0; n];
        c[0] = 1;
        FpPoly { coeffs: c, field }
    }

    /// Indicator polynomial of an exponent set, scaled by `scale`.
    pub fn from_support(field: PrimeField, n: usize, support: &[usize], scale: u32) -> Self {
        let mut c = vec![0; n];
        for &i in support {
            c[i % n] = scale % field.p();
        }
        FpPoly { coeffs: c, field }
    }

    /// The all-ones polynomial corresponding to the all-one vector.
    pub fn all_ones(field: PrimeField, n: usize) -> Self {
        FpPoly {
            coeffs: vec![1; n],
            field,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same(&self, rhs: &Self) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::ModulusMismatch {
                left: self.field.p(),
                right: rhs.field.p(),
            });
        }
        if self.n() != rhs.n() {
            return Err(Error::LengthMismatch {
                left: self.n(),
                right: rhs.n(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let f = self.field;
        Ok(FpPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
            field: f,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let f = self.field;
        Ok(FpPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
            field: f,
        })
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        let c = c % f.p();
        FpPoly {
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
            field: f,
        }
    }

    /// Cyclic convolution: exponents reduced mod n.
    pub fn cyclic_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let n = self.n();
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; n];
        for (i, &fi) in self.coeffs.iter().enumerate() {
            if fi == 0 {
                continue;
            }
            for (j, &gj) in rhs.coeffs.iter().enumerate() {
                if gj == 0 {
                    continue;
                }
                let k = i + j;
                let k = if k >= n { k - n } else { k };
                acc[k] += fi as u64 * gj as u64;
            }
        }
        Ok(FpPoly {
            coeffs: acc.into_iter().map(|x| (x % p) as u32).collect(),
            field: self.field,
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.cyclic_mul(self).map(|sq| sq == *self).unwrap_or(false)
    }

    /// Coordinate permutation i -> a*i mod n on exponents. Requires gcd(a, n) = 1.
    pub fn mu_map(&self, a: u64) -> Result<Self> {
        let n = self.n() as u64;
        if gcd(a % n, n) != 1 {
            return Err(Error::NotAUnit { a, n });
        }
        let mut out = vec![0; self.n()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[((a % n) * i as u64 % n) as usize] = c;
        }
        Ok(FpPoly {
            coeffs: out,
            field: self.field,
        })
    }

    /// f(x^{-1}), the multiplier by n - 1.
    pub fn reciprocal(&self) -> Self {
        let n = self.n();
        let mut out = vec![0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(n - i) % n] = c;
        }
        FpPoly {
            coeffs: out,
            field: self.field,
        }
    }

    /// Coefficient vector of x^shift * f.
    pub fn shifted(&self, shift: usize) -> Vec<u32> {
        let n = self.n();
        let mut out = vec![0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(i + shift) % n] = c;
        }
        out
    }

    /// Evaluation at x = 1, i.e. the coordinate sum.
    pub fn eval_at_one(&self) -> u32 {
        let f = self.field;
        self.coeffs.iter().fold(0, |acc, &c| f.add(acc, c))
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A polynomial in R_{p,n}: dense vector of ring elements, index i holding
/// the coefficient of x^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPoly {
    coeffs: Vec<RingElement>,
    field: PrimeField,
}

impl RingPoly {
    pub fn new(field: PrimeField, coeffs: Vec<RingElement>) -> Result<Self> {
        for c in &coeffs {
            if c.field() != field {
                return Err(Error::ModulusMismatch {
                    left: field.p(),
                    right: c.field().p(),
                });
            }
        }
        Ok(RingPoly { coeffs, field })
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        RingPoly {
            coeffs: vec![RingElement::zero(field); n],
            field,
        }
    }

    /// Builds (1 - v) f0 + v f1 from a pair of base-field polynomials.
    pub fn from_crt(f0: &FpPoly, f1: &FpPoly) -> Result<Self> {
        if f0.field() != f1.field() {
            return Err(Error::ModulusMismatch {
                left: f0.field().p(),
                right: f1.field().p(),
            });
        }
        if f0.n() != f1.n() {
            return Err(Error::LengthMismatch {
                left: f0.n(),
                right: f1.n(),
            });
        }
        let field = f0.field();
        let coeffs = f0
            .coeffs()
            .iter()
            .zip(f1.coeffs())
            .map(|(&s, &t)| RingElement::crt_join(field, s, t))
            .collect();
        Ok(RingPoly { coeffs, field })
    }

    /// The monomial x^k.
    pub fn monomial(field: PrimeField, n: usize, k: usize) -> Self {
        let mut coeffs = vec![RingElement::zero(field); n];
        coeffs[k % n] = RingElement::one(field);
        RingPoly { coeffs, field }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_same(&self, rhs: &Self) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::ModulusMismatch {
                left: self.field.p(),
                right: rhs.field.p(),
            });
        }
        if self.n() != rhs.n() {
            return Err(Error::LengthMismatch {
                left: self.n(),
                right: rhs.n(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(RingPoly {
            coeffs,
            field: self.field,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(RingPoly {
            coeffs,
            field: self.field,
        })
    }

    /// Cyclic convolution in R_{p,n}.
    pub fn cyclic_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let n = self.n();
        let f = self.field;
        let mut out = vec![RingElement::zero(f); n];
        for (i, fi) in self.coeffs.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in rhs.coeffs.iter().enumerate() {
                if gj.is_zero() {
                    continue;
                }
                let k = i + j;
                let k = if k >= n { k - n } else { k };
                out[k] = out[k].add(&fi.mul_in(f, gj)).expect("same field");
            }
        }
        Ok(RingPoly {
            coeffs: out,
            field: f,
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.cyclic_mul(self).map(|sq| sq == *self).unwrap_or(false)
    }

    /// CRT components: coefficientwise evaluation at v = 0 and v = 1.
    pub fn crt_components(&self) -> (FpPoly, FpPoly) {
        let mut f0 = Vec::with_capacity(self.n());
        let mut f1 = Vec::with_capacity(self.n());
        for c in &self.coeffs {
            let (s, t) = c.crt_split();
            f0.push(s);
            f1.push(t);
        }
        (FpPoly::new(self.field, f0), FpPoly::new(self.field, f1))
    }

    /// Splits an idempotent as (1 - v) f0 + v f1 with both components
    /// idempotent in the base quotient. Errors when the input is not
    /// idempotent.
    pub fn idempotent_split(&self) -> Result<(FpPoly, FpPoly)> {
        if !self.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        Ok(self.crt_components())
    }

    pub fn mu_map(&self, a: u64) -> Result<Self> {
        let n = self.n() as u64;
        if gcd(a % n, n) != 1 {
            return Err(Error::NotAUnit { a, n });
        }
        let mut out = vec![RingElement::zero(self.field); self.n()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[((a % n) * i as u64 % n) as usize] = c;
        }
        Ok(RingPoly {
            coeffs: out,
            field: self.field,
        })
    }

    pub fn reciprocal(&self) -> Self {
        let n = self.n();
        let mut out = vec![RingElement::zero(self.field); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(n - i) % n] = c;
        }
        RingPoly {
            coeffs: out,
            field: self.field,
        }
    }

    /// The substitution c(x) -> c((1-2v)x): coefficient i is multiplied by
    /// (1-2v)^i. For odd n this is a ring isomorphism onto
    /// `S_n = (F_p + vF_p)[x]/(x^n - (1-2v))`; it is its own inverse as a
    /// coefficient map since (1-2v)^2 = 1.
    pub fn psi_transform(&self) -> Result<Self> {
        if self.n() % 2 == 0 {
            return Err(Error::RequiresOddLength(self.n()));
        }
        let u = RingElement::one_minus_two_v(self.field);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i % 2 == 0 {
                    *c
                } else {
                    c.mul_in(self.field, &u)
                }
            })
            .collect();
        Ok(RingPoly {
            coeffs,
            field: self.field,
        })
    }

    /// Multiplication in S_n: convolution with the reduction x^n = (1-2v).
    pub fn sn_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let n = self.n();
        let f = self.field;
        let u = RingElement::one_minus_two_v(f);
        let mut out = vec![RingElement::zero(f); n];
        for (i, fi) in self.coeffs.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in rhs.coeffs.iter().enumerate() {
                if gj.is_zero() {
                    continue;
                }
                let mut term = fi.mul_in(f, gj);
                let mut k = i + j;
                if k >= n {
                    k -= n;
                    term = term.mul_in(f, &u);
                }
                out[k] = out[k].add(&term).expect("same field");
            }
        }
        Ok(RingPoly {
            coeffs: out,
            field: f,
        })
    }

    /// Coefficient vector of x^shift * f.
    pub fn shifted(&self, shift: usize) -> Vec<RingElement> {
        let n = self.n();
        let mut out = vec![RingElement::zero(self.field); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(i + shift) % n] = c;
        }
        out
    }
}

impl fmt::Display for RingPoly {
    /// Comma-separated coefficients, lowest degree first, each in the
    /// `a+bv` text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parse the comma-separated coefficient form against a known field.
pub fn parse_ring_poly(field: PrimeField, s: &str) -> Result<RingPoly> {
    let coeffs = s
        .split(',')
        .map(|t| parse_ring_element(field, t))
        .collect::<Result<Vec<_>>>()?;
    RingPoly::new(field, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn fp(p: u32, coeffs: &[u32]) -> FpPoly {
        FpPoly::new(f(p), coeffs.to_vec())
    }

    // q = 7 residue data used repeatedly below
    const Q7: [usize; 3] = [1, 2, 4];
    const N7: [usize; 3] = [3, 5, 6];

    fn e1_q7() -> FpPoly {
        FpPoly::from_support(f(2), 7, &Q7, 1)
    }

    fn e2_q7() -> FpPoly {
        FpPoly::from_support(f(2), 7, &N7, 1)
    }

    #[test]
    fn monomial_wraparound() {
        let x = RingPoly::monomial(f(2), 7, 1);
        let x6 = RingPoly::monomial(f(2), 7, 6);
        let one = RingPoly::monomial(f(2), 7, 0);
        assert_eq!(x.cyclic_mul(&x6).unwrap(), one);
    }

    #[test]
    fn e1_times_e2_q7_is_all_ones() {
        let h = FpPoly::all_ones(f(2), 7);
        assert_eq!(e1_q7().cyclic_mul(&e2_q7()).unwrap(), h);
    }

    #[test]
    fn e1_times_e2_q17_is_zero() {
        let q: Vec<usize> = (1..17)
            .filter(|&i| [1, 2, 4, 8, 9, 13, 15, 16].contains(&i))
            .collect();
        let n: Vec<usize> = (1..17).filter(|i| !q.contains(i)).collect();
        let e1 = FpPoly::from_support(f(2), 17, &q, 1);
        let e2 = FpPoly::from_support(f(2), 17, &n, 1);
        assert!(e1.cyclic_mul(&e2).unwrap().is_zero());
    }

    #[test]
    fn idempotency_examples() {
        assert!(RingPoly::zero(f(2), 7).is_idempotent());
        // (1+v)(x+x^2+x^4) + v(x^3+x^5+x^6) in characteristic 2
        let e = RingPoly::from_crt(&e1_q7(), &e2_q7()).unwrap();
        assert!(e.is_idempotent());
        let x = RingPoly::monomial(f(2), 7, 1);
        assert!(!x.is_idempotent());
    }

    #[test]
    fn idempotent_split_examples() {
        let e = RingPoly::from_crt(&e1_q7(), &e2_q7()).unwrap();
        let (f0, f1) = e.idempotent_split().unwrap();
        assert_eq!(f0, e1_q7());
        assert_eq!(f1, e2_q7());

        let one = RingPoly::monomial(f(3), 5, 0);
        let (f0, f1) = one.idempotent_split().unwrap();
        assert_eq!(f0, FpPoly::one(f(3), 5));
        assert_eq!(f1, FpPoly::one(f(3), 5));

        // f = v*h splits as (0, h)
        let zero = FpPoly::zero(f(2), 7);
        let h = FpPoly::all_ones(f(2), 7);
        let vh = RingPoly::from_crt(&zero, &h).unwrap();
        let (f0, f1) = vh.idempotent_split().unwrap();
        assert!(f0.is_zero());
        assert_eq!(f1, h);

        let x = RingPoly::monomial(f(2), 7, 1);
        assert_eq!(x.idempotent_split().unwrap_err(), Error::NotIdempotent);
    }

    #[test]
    fn lemma_idem_both_directions() {
        // All 8 idempotents of F_2[x]/(x^7 - 1): the algebra splits into
        // three factors, spanned via e1, e2 and the all-ones h.
        let one = FpPoly::one(f(2), 7);
        let h = FpPoly::all_ones(f(2), 7);
        let base = [
            FpPoly::zero(f(2), 7),
            one.clone(),
            e1_q7(),
            e2_q7(),
            one.sub(&e1_q7()).unwrap(),
            one.sub(&e2_q7()).unwrap(),
            h.clone(),
            one.sub(&h).unwrap(),
        ];
        for b in &base {
            assert!(b.is_idempotent());
        }
        for f0 in &base {
            for f1 in &base {
                let g = RingPoly::from_crt(f0, f1).unwrap();
                assert!(g.is_idempotent());
                let (s0, s1) = g.idempotent_split().unwrap();
                assert_eq!(&s0, f0);
                assert_eq!(&s1, f1);
                assert!(s0.is_idempotent() && s1.is_idempotent());
            }
        }
    }

    #[test]
    fn mu_map_examples() {
        // mu_3 sends {1,2,4} to {3,6,5}
        assert_eq!(e1_q7().mu_map(3).unwrap(), e2_q7());
        let e = RingPoly::from_crt(&e1_q7(), &e2_q7()).unwrap();
        assert_eq!(e.mu_map(1).unwrap(), e);
        assert_eq!(e.mu_map(2).unwrap().mu_map(4).unwrap(), e); // 2*4 = 8 = 1 mod 7
        assert!(e.mu_map(7).is_err());
    }

    #[test]
    fn mu_map_is_multiplicative() {
        // mu_a(fg) = mu_a(f) mu_a(g) for all units a mod 7
        let mut rng = 12345u64;
        let mut next = || {
            rng = rng
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (rng >> 33) as u32
        };
        let field = f(2);
        for _ in 0..20 {
            let fpoly = RingPoly::new(
                field,
                (0..7)
                    .map(|_| RingElement::new(field, next() % 2, next() % 2))
                    .collect(),
            )
            .unwrap();
            let gpoly = RingPoly::new(
                field,
                (0..7)
                    .map(|_| RingElement::new(field, next() % 2, next() % 2))
                    .collect(),
            )
            .unwrap();
            for a in 1..7u64 {
                let lhs = fpoly.cyclic_mul(&gpoly).unwrap().mu_map(a).unwrap();
                let rhs = fpoly
                    .mu_map(a)
                    .unwrap()
                    .cyclic_mul(&gpoly.mu_map(a).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(e1_q7().reciprocal(), e2_q7()); // -1 is a non-residue mod 7
        let q: Vec<usize> = vec![1, 2, 4, 8, 9, 13, 15, 16];
        let e1 = FpPoly::from_support(f(2), 17, &q, 1);
        assert_eq!(e1.reciprocal(), e1); // -1 = 16 is a residue mod 17
        let c = fp(3, &[2, 0, 0, 0, 0]);
        assert_eq!(c.reciprocal(), c);
    }

    #[test]
    fn psi_basics() {
        let one = RingPoly::monomial(f(3), 5, 0);
        assert_eq!(one.psi_transform().unwrap(), one);
        let x = RingPoly::monomial(f(3), 5, 1);
        let px = x.psi_transform().unwrap();
        assert_eq!(px.coeffs()[1], RingElement::new(f(3), 1, 1)); // 1 - 2v = 1 + v mod 3
        assert!(RingPoly::zero(f(3), 4).psi_transform().is_err());
        // involution on coefficients
        let e = RingPoly::from_crt(&e1_q7(), &e2_q7()).unwrap();
        assert_eq!(e.psi_transform().unwrap().psi_transform().unwrap(), e);
    }

    #[test]
    fn poly_mul_commutative_associative() {
        let mut rng = 99u64;
        let mut next = || {
            rng = rng
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (rng >> 33) as u32
        };
        for p in [2u32, 3, 5] {
            for n in [3usize, 5, 7] {
                let field = f(p);
                let rand_poly = |next: &mut dyn FnMut() -> u32| {
                    RingPoly::new(
                        field,
                        (0..n)
                            .map(|_| RingElement::new(field, next() % p, next() % p))
                            .collect(),
                    )
                    .unwrap()
                };
                for _ in 0..10 {
                    let a = rand_poly(&mut next);
                    let b = rand_poly(&mut next);
                    let c = rand_poly(&mut next);
                    assert_eq!(a.cyclic_mul(&b).unwrap(), b.cyclic_mul(&a).unwrap());
                    assert_eq!(
                        a.cyclic_mul(&b).unwrap().cyclic_mul(&c).unwrap(),
                        a.cyclic_mul(&b.cyclic_mul(&c).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let a = RingPoly::zero(f(2), 7);
        let b = RingPoly::zero(f(2), 5);
        assert!(a.cyclic_mul(&b).is_err());
        let c = RingPoly::zero(f(3), 7);
        assert!(a.cyclic_mul(&c).is_err());
    }

    #[test]
    fn sn_mul_matches_plain_convolution_with_folding() {
        // independent route: multiply without wraparound, then fold every
        // exponent >= n down by n with a (1-2v) factor
        let mut rng = 31u64;
        let mut next = || {
            rng = rng
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (rng >> 33) as u32
        };
        for p in [2u32, 3, 5] {
            let field = f(p);
            let n = 5;
            let u = RingElement::one_minus_two_v(field);
            for _ in 0..50 {
                let a = RingPoly::new(
                    field,
                    (0..n)
                        .map(|_| RingElement::new(field, next() % p, next() % p))
                        .collect(),
                )
                .unwrap();
                let b = RingPoly::new(
                    field,
                    (0..n)
                        .map(|_| RingElement::new(field, next() % p, next() % p))
                        .collect(),
                )
                .unwrap();
                let mut wide = vec![RingElement::zero(field); 2 * n - 1];
                for (i, ai) in a.coeffs().iter().enumerate() {
                    for (j, bj) in b.coeffs().iter().enumerate() {
                        wide[i + j] = wide[i + j].add(&ai.mul(bj).unwrap()).unwrap();
                    }
                }
                let mut folded = wide[..n].to_vec();
                for (e, c) in wide.iter().enumerate().skip(n) {
                    folded[e - n] = folded[e - n].add(&c.mul(&u).unwrap()).unwrap();
                }
                let expected = RingPoly::new(field, folded).unwrap();
                assert_eq!(a.sn_mul(&b).unwrap(), expected);
            }
        }
    }

    #[test]
    fn poly_text_round_trip() {
        let field = f(3);
        let poly = parse_ring_poly(field, "1+2v,0,v,2,1+v").unwrap();
        assert_eq!(poly.to_string(), "1+2v,0,v,2,1+v");
        assert_eq!(poly.n(), 5);
    }
}
