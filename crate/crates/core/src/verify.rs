//! Machine checks of the structural facts the QR families satisfy: the
//! equivalence, intersection, sum, cardinality, decomposition and duality
//! items for the four codes of a (p, q) pair, the Hermitian self-dual
//! augmentation family in characteristic 2, and randomized property checks
//! for the Gray maps and the x -> (1-2v)x substitution. Every item is
//! checked at code level (canonical-form equality); a failing item carries a
//! witness or a size mismatch explanation.

use crate::analysis::{bachoc_extremality, EnumerationConfig};
use crate::arith::{PrimeField, RingElement};
use crate::code::LinearCode;
use crate::cyclic::{FpPoly, RingPoly};
use crate::error::{Error, Result};
use crate::gray::{euclidean_inner, gray_map, word_weight, WeightKind};
use crate::qr::{qr_family, AugmentUnit, QRFamily, QrCode};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

/// One checked statement.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremItem {
    pub id: String,
    pub statement: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// All checks for one instance, never short-circuited.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub p: u32,
    pub q: u32,
    pub items: Vec<TheoremItem>,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    /// Plain-text rendering, one line per item.
    pub fn to_text(&self) -> String {
        let mut out = format!("instance (p, q) = ({}, {})\n", self.p, self.q);
        for item in &self.items {
            let mark = if item.pass { "pass" } else { "FAIL" };
            out.push_str(&format!("  [{mark}] {:<16} {}\n", item.id, item.statement));
            if let Some(d) = &item.detail {
                out.push_str(&format!("         {d}\n"));
            }
        }
        out
    }
}

struct ReportBuilder {
    items: Vec<TheoremItem>,
}

impl ReportBuilder {
    fn new() -> Self {
        ReportBuilder { items: Vec::new() }
    }

    fn check(&mut self, id: &str, statement: &str, pass: bool, witness: Option<String>) {
        self.items.push(TheoremItem {
            id: id.to_string(),
            statement: statement.to_string(),
            pass,
            detail: if pass { None } else { witness },
        });
    }

    fn note(&mut self, id: &str, statement: &str, detail: String) {
        self.items.push(TheoremItem {
            id: id.to_string(),
            statement: statement.to_string(),
            pass: true,
            detail: Some(detail),
        });
    }
}

/// First generator of `a` that is missing from `b`, as a witness word.
fn equality_witness(a: &LinearCode, b: &LinearCode) -> Option<String> {
    if a.card_exponent() != b.card_exponent() {
        return Some(format!(
            "cardinality exponents differ: {} vs {}",
            a.card_exponent(),
            b.card_exponent()
        ));
    }
    for row in a.ring_generators().ok()? {
        if !b.contains_ring(&row).ok()? {
            let text: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            return Some(format!("witness word: ({})", text.join(", ")));
        }
    }
    for row in b.ring_generators().ok()? {
        if !a.contains_ring(&row).ok()? {
            let text: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            return Some(format!("witness word: ({})", text.join(", ")));
        }
    }
    None
}

fn check_code_equal(
    rb: &mut ReportBuilder,
    id: &str,
    statement: &str,
    a: &LinearCode,
    b: &LinearCode,
) {
    let pass = a == b;
    let witness = if pass { None } else { equality_witness(a, b) };
    rb.check(
        id,
        statement,
        pass,
        witness.or_else(|| Some("codes differ".into())),
    );
}

/// Checks items a) through g) plus the extension duality for one family.
/// Exposed on the family so that deliberately corrupted families can be fed
/// through the same checks.
pub fn verify_family(fam: &QRFamily) -> TheoremReport {
    let mut rb = ReportBuilder::new();
    let q1 = fam.code(QrCode::Q1);
    let q2 = fam.code(QrCode::Q2);
    let q1p = fam.code(QrCode::Q1Prime);
    let q2p = fam.code(QrCode::Q2Prime);
    let h_code = fam.h_code();
    let n = fam.q as usize;

    // a) every non-residue multiplier carries Q1 onto Q2 and Q1' onto Q2'
    let mut equiv_ok = true;
    let mut equiv_witness = None;
    for &nr in &fam.nset {
        let big = q1.permute(nr as u64).map(|c| c == q2).unwrap_or(false);
        let small = q1p.permute(nr as u64).map(|c| c == q2p).unwrap_or(false);
        if !big || !small {
            equiv_ok = false;
            equiv_witness = Some(format!("multiplier {nr} fails"));
            break;
        }
    }
    rb.check(
        "a.equivalence",
        "mu_n(Q1) = Q2 and mu_n(Q1') = Q2' for all non-residues n",
        equiv_ok,
        equiv_witness,
    );

    // b) intersection and sum of the big pair
    check_code_equal(
        &mut rb,
        "b.intersection",
        "Q1 and Q2 intersect in the all-ones code",
        &q1.intersect(&q2).expect("compatible"),
        &h_code,
    );
    check_code_equal(
        &mut rb,
        "b.sum",
        "Q1 + Q2 is the whole ambient space",
        &q1.sum(&q2).expect("compatible"),
        &LinearCode::full_space(fam.field, n, crate::code::Alphabet::Ring),
    );
    // idempotent-level normalization of the same facts: ab = (1/q) h and
    // a + b = 1 + (1/q) h
    let lam = fam.field.inv(fam.q % fam.p).expect("q invertible mod p");
    let lam_h = fam.h.scale(lam);
    let one = FpPoly::one(fam.field, n);
    let prod_ok = fam.a.cyclic_mul(&fam.b).expect("same ring") == lam_h;
    let sum_ok = fam.a.add(&fam.b).expect("same ring") == one.add(&lam_h).expect("same ring");
    rb.check(
        "b.idempotents",
        "a * b = (1/q) h and a + b = 1 + (1/q) h",
        prod_ok && sum_ok,
        Some("base idempotent identities fail".into()),
    );

    // c) cardinality of the big pair
    rb.check(
        "c.cardinality",
        "|Q1| = |Q2| = p^(q+1)",
        q1.card_exponent() == n + 1 && q2.card_exponent() == n + 1,
        Some(format!(
            "exponents are {} and {}",
            q1.card_exponent(),
            q2.card_exponent()
        )),
    );

    // d) decomposition Q_i = Q_i' + <h>
    check_code_equal(
        &mut rb,
        "d.decomposition",
        "Q1 = Q1' + <h>",
        &q1p.sum(&h_code).expect("compatible"),
        &q1,
    );
    check_code_equal(
        &mut rb,
        "d.decomposition2",
        "Q2 = Q2' + <h>",
        &q2p.sum(&h_code).expect("compatible"),
        &q2,
    );

    // e) cardinality of the small pair
    rb.check(
        "e.cardinality",
        "|Q1'| = |Q2'| = p^(q-1)",
        q1p.card_exponent() == n - 1 && q2p.card_exponent() == n - 1,
        Some(format!(
            "exponents are {} and {}",
            q1p.card_exponent(),
            q2p.card_exponent()
        )),
    );

    // f) duality of the pairs, split on q mod 4
    if fam.q % 4 == 3 {
        check_code_equal(
            &mut rb,
            "f.duality",
            "dual(Q1) = Q1'",
            &q1.euclidean_dual(),
            &q1p,
        );
        check_code_equal(
            &mut rb,
            "f.duality2",
            "dual(Q2) = Q2'",
            &q2.euclidean_dual(),
            &q2p,
        );
        rb.check(
            "f.orthogonality",
            "Q1' and Q2' are self-orthogonal",
            q1p.is_self_orthogonal() && q2p.is_self_orthogonal(),
            Some("a small code is not inside its dual".into()),
        );
    } else {
        check_code_equal(
            &mut rb,
            "f.duality",
            "dual(Q1) = Q2'",
            &q1.euclidean_dual(),
            &q2p,
        );
        check_code_equal(
            &mut rb,
            "f.duality2",
            "dual(Q2) = Q1'",
            &q2.euclidean_dual(),
            &q1p,
        );
    }

    // g) the small pair meets trivially and sums to the zero-sum hyperplane
    check_code_equal(
        &mut rb,
        "g.intersection",
        "Q1' and Q2' intersect trivially",
        &q1p.intersect(&q2p).expect("compatible"),
        &LinearCode::zero(fam.field, n, crate::code::Alphabet::Ring),
    );
    check_code_equal(
        &mut rb,
        "g.sum",
        "Q1' + Q2' is the zero-coordinate-sum hyperplane",
        &q1p.sum(&q2p).expect("compatible"),
        &LinearCode::zero_sum_hyperplane(fam.field, n),
    );

    // extension duality, split on q mod 4
    match (fam.extend(QrCode::Q1), fam.extend(QrCode::Q2)) {
        (Ok(e1), Ok(e2)) => {
            if fam.q % 4 == 3 {
                rb.check(
                    "ext.self-dual",
                    "both extended codes are self-dual",
                    e1.is_self_dual() && e2.is_self_dual(),
                    equality_witness(&e1, &e1.euclidean_dual())
                        .or_else(|| Some("extension not self-dual".into())),
                );
            } else {
                check_code_equal(
                    &mut rb,
                    "ext.dual-swap",
                    "dual(ext Q1) = ext Q2",
                    &e1.euclidean_dual(),
                    &e2,
                );
                check_code_equal(
                    &mut rb,
                    "ext.dual-swap2",
                    "dual(ext Q2) = ext Q1",
                    &e2.euclidean_dual(),
                    &e1,
                );
            }
        }
        (e1, e2) => {
            rb.check(
                "ext.construct",
                "extensions can be built",
                false,
                Some(format!("{:?} / {:?}", e1.err(), e2.err())),
            );
        }
    }

    TheoremReport {
        p: fam.p,
        q: fam.q,
        items: rb.items,
    }
}

/// Builds the family for (p, q) and checks every item.
pub fn verify_qr_theorems(p: u32, q: u32) -> Result<TheoremReport> {
    Ok(verify_family(&qr_family(p, q)?))
}

/// Checks the Hermitian self-dual family for p = 2, q = 1 mod 8: the four
/// augmented codes and both extensions are Hermitian self-dual, the
/// augmentation idempotents have the shapes e_i + v and 1 + v + e_i, and
/// every Bachoc distance within the enumeration budget respects the bound
/// 2(floor(n/3) + 1).
pub fn verify_hermitian_family(q: u32, cfg: &EnumerationConfig) -> Result<TheoremReport> {
    let fam = qr_family(2, q)?;
    if q % 8 != 1 {
        return Err(Error::AugmentUnsupported { p: 2, q });
    }
    let mut rb = ReportBuilder::new();
    let one = FpPoly::one(fam.field, q as usize);

    let mut hermitian_codes: Vec<(String, LinearCode)> = Vec::new();

    // augmentation idempotent identities, as unordered pairs over i = 1, 2
    let v_idems: Vec<RingPoly> = [QrCode::Q1Prime, QrCode::Q2Prime]
        .iter()
        .map(|&w| fam.augment_idempotent(w, AugmentUnit::V))
        .collect::<Result<_>>()?;
    let v_expected: Vec<RingPoly> = [&fam.e1, &fam.e2]
        .iter()
        .map(|e| RingPoly::from_crt(e, &one.add(e).expect("same ring")).expect("same ring"))
        .collect();
    rb.check(
        "aug.idem-v",
        "idempotents of Q' + <all-v> are the pair e_i + v",
        v_expected.iter().all(|x| v_idems.contains(x)),
        Some(format!("got {} and {}", v_idems[0], v_idems[1])),
    );
    let u_idems: Vec<RingPoly> = [QrCode::Q1Prime, QrCode::Q2Prime]
        .iter()
        .map(|&w| fam.augment_idempotent(w, AugmentUnit::OnePlusV))
        .collect::<Result<_>>()?;
    let u_expected: Vec<RingPoly> = [&fam.e1, &fam.e2]
        .iter()
        .map(|e| RingPoly::from_crt(&one.add(e).expect("same ring"), e).expect("same ring"))
        .collect();
    rb.check(
        "aug.idem-1v",
        "idempotents of Q' + <all-(1+v)> are the pair 1 + v + e_i",
        u_expected.iter().all(|x| u_idems.contains(x)),
        Some(format!("got {} and {}", u_idems[0], u_idems[1])),
    );

    for which in [QrCode::Q1Prime, QrCode::Q2Prime] {
        for unit in [AugmentUnit::V, AugmentUnit::OnePlusV] {
            let name = format!(
                "{}+<{}>",
                if which == QrCode::Q1Prime {
                    "Q1'"
                } else {
                    "Q2'"
                },
                if unit == AugmentUnit::V { "v" } else { "1+v" }
            );
            let code = fam.hermitian_augment(which, unit)?;
            rb.check(
                &format!("aug.hsd.{name}"),
                &format!("{name} is Hermitian self-dual"),
                code.is_hermitian_self_dual()?,
                equality_witness(&code, &code.hermitian_dual()?),
            );
            rb.check(
                &format!("aug.card.{name}"),
                &format!("|{name}| = 2^q"),
                code.card_exponent() == q as usize,
                Some(format!("exponent {}", code.card_exponent())),
            );
            hermitian_codes.push((name, code));
        }
    }

    let e1 = fam.extend(QrCode::Q1)?;
    let e2 = fam.extend(QrCode::Q2)?;
    rb.check(
        "ext.hsd",
        "both extended codes are Hermitian self-dual",
        e1.is_hermitian_self_dual()? && e2.is_hermitian_self_dual()?,
        equality_witness(&e1, &e1.hermitian_dual()?),
    );
    check_code_equal(
        &mut rb,
        "ext.dual-swap",
        "dual(ext Q1) = ext Q2",
        &e1.euclidean_dual(),
        &e2,
    );
    hermitian_codes.push(("ext Q1".into(), e1));
    hermitian_codes.push(("ext Q2".into(), e2));

    for (name, code) in &hermitian_codes {
        match bachoc_extremality(code, cfg) {
            Ok(rep) => {
                rb.check(
                    &format!("bound.{name}"),
                    &format!("d_B({name}) <= 2(floor(n/3) + 1)"),
                    rep.d_b <= rep.bound,
                    Some(format!("d_B = {} exceeds bound {}", rep.d_b, rep.bound)),
                );
            }
            Err(Error::BudgetExceeded { needed_log2, .. }) => {
                rb.note(
                    &format!("bound.{name}"),
                    &format!("d_B({name}) <= 2(floor(n/3) + 1)"),
                    format!(
                        "skipped: enumeration needs about 2^{needed_log2:.0} words, over budget"
                    ),
                );
            }
            Err(e) => return Err(e),
        }
    }

    Ok(TheoremReport {
        p: 2,
        q,
        items: rb.items,
    })
}

/// Randomized-property report.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub trials: u32,
    pub failures: Vec<String>,
}

impl PropertyReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn random_element(rng: &mut StdRng, field: PrimeField) -> RingElement {
    RingElement::new(
        field,
        rng.gen_range(0..field.p()),
        rng.gen_range(0..field.p()),
    )
}

fn random_word(rng: &mut StdRng, field: PrimeField, n: usize) -> Vec<RingElement> {
    (0..n).map(|_| random_element(rng, field)).collect()
}

/// Isometry, linearity and orthogonality preservation of the Gray map on
/// random words, plus the exhaustive per-symbol weight tables.
pub fn verify_gray_properties(p: u32, n: usize, trials: u32, seed: u64) -> Result<PropertyReport> {
    let field = PrimeField::new(p)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = Vec::new();

    // exhaustive per-symbol table: Lee weight of every element equals the
    // Hamming weight of its Gray image
    for a in 0..p {
        for b in 0..p {
            let x = RingElement::new(field, a, b);
            let img = gray_map(&[x])?;
            let wh = img.iter().filter(|&&c| c != 0).count() as u32;
            if wh != crate::gray::symbol_weight(&x, WeightKind::Lee)? {
                failures.push(format!("symbol table mismatch at ({a}, {b})"));
            }
        }
    }

    for t in 0..trials {
        let x = random_word(&mut rng, field, n);
        let y = random_word(&mut rng, field, n);
        // isometry
        let img = gray_map(&x)?;
        let wh = img.iter().filter(|&&c| c != 0).count();
        if wh != word_weight(&x, WeightKind::Lee)? {
            failures.push(format!("trial {t}: Lee weight differs from image weight"));
            continue;
        }
        // linearity
        let sum: Vec<RingElement> = x
            .iter()
            .zip(&y)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        let img_sum = gray_map(&sum)?;
        let img_y = gray_map(&y)?;
        let added: Vec<u32> = img
            .iter()
            .zip(&img_y)
            .map(|(&u, &w)| field.add(u, w))
            .collect();
        if img_sum != added {
            failures.push(format!("trial {t}: image of the sum differs"));
            continue;
        }
        // orthogonality preservation: build an orthogonal pair by solving
        // for one coordinate where x is a unit
        let mut z = random_word(&mut rng, field, n);
        if let Some(pos) = x.iter().position(|e| e.is_unit()) {
            let mut acc = RingElement::zero(field);
            for (i, (xi, zi)) in x.iter().zip(&z).enumerate() {
                if i != pos {
                    acc = acc.add(&xi.mul(zi)?)?;
                }
            }
            // xi * zi = -acc  =>  zi = -acc / xi via CRT components
            let (xs, xt) = x[pos].crt_split();
            let (as_, at) = acc.neg().crt_split();
            let zi = RingElement::crt_join(
                field,
                field.mul(as_, field.inv(xs).expect("unit")),
                field.mul(at, field.inv(xt).expect("unit")),
            );
            z[pos] = zi;
            if !euclidean_inner(&x, &z)?.is_zero() {
                failures.push(format!("trial {t}: constructed pair is not orthogonal"));
                continue;
            }
            let img_z = gray_map(&z)?;
            let dot = img
                .iter()
                .zip(&img_z)
                .fold(0u32, |acc, (&u, &w)| field.add(acc, field.mul(u, w)));
            if dot != 0 {
                failures.push(format!(
                    "trial {t}: Gray images of an orthogonal pair are not orthogonal"
                ));
            }
        }
    }
    Ok(PropertyReport { trials, failures })
}

/// Multiplicativity and involutivity of the x -> (1-2v)x substitution, plus
/// ideal-image closure for the cyclic codes of the instance.
pub fn verify_psi(p: u32, n: usize, trials: u32, seed: u64) -> Result<PropertyReport> {
    if n % 2 == 0 {
        return Err(Error::RequiresOddLength(n));
    }
    let field = PrimeField::new(p)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let random_poly = |rng: &mut StdRng| -> RingPoly {
        RingPoly::new(field, (0..n).map(|_| random_element(rng, field)).collect())
            .expect("uniform field")
    };
    for t in 0..trials {
        let f = random_poly(&mut rng);
        let g = random_poly(&mut rng);
        let lhs = f.cyclic_mul(&g).expect("same ring").psi_transform()?;
        let rhs = f.psi_transform()?.sn_mul(&g.psi_transform()?)?;
        if lhs != rhs {
            failures.push(format!("trial {t}: psi(fg) differs from psi(f) psi(g)"));
        }
        if f.psi_transform()?.psi_transform()? != f {
            failures.push(format!("trial {t}: psi is not an involution"));
        }
    }
    // ideal closure: the image of a cyclic code is closed under
    // multiplication by arbitrary elements of the target ring
    let ideal = match qr_family(p, n as u32) {
        Ok(fam) => Some(fam.code(QrCode::Q1)),
        Err(_) => None,
    };
    let ideal = ideal.unwrap_or_else(|| {
        // x - 1 generates a proper, non-trivial ideal for every (p, n)
        let mut coeffs = vec![RingElement::zero(field); n];
        coeffs[0] = RingElement::one(field).neg();
        coeffs[1] = RingElement::one(field);
        LinearCode::from_cyclic_poly(&RingPoly::new(field, coeffs).expect("uniform"))
    });
    for t in 0..(trials / 10).max(1) {
        // random codeword of the ideal: random module combination of row generators
        let gens = ideal.ring_generators().expect("ring code");
        let mut word = vec![RingElement::zero(field); n];
        for g in &gens {
            let c = random_element(&mut rng, field);
            for (w, e) in word.iter_mut().zip(g) {
                *w = w.add(&e.mul_in(field, &c)).expect("same ring");
            }
        }
        let wp = RingPoly::new(field, word).expect("uniform");
        let multiplier = random_poly(&mut rng);
        let prod = wp.psi_transform()?.sn_mul(&multiplier)?;
        // pull back and test membership
        let back = prod.psi_transform()?;
        if !ideal.contains_ring(back.coeffs())? {
            failures.push(format!(
                "trial {t}: psi image is not closed under multiplication"
            ));
        }
    }
    Ok(PropertyReport { trials, failures })
}
