//! Exact weight enumerators and certified minimum distances.
//!
//! Enumeration walks the CRT message space (k1 + k2 field symbols for ring
//! codes, k for field codes) in reflected Gray order, so each step updates
//! the current codeword by a single generator row. Characteristic 2 packs
//! component words into single machine words; odd characteristic keeps byte
//! vectors. The message range is split into contiguous chunks processed by
//! independent workers and the per-chunk histograms are merged by addition,
//! so results are identical for any worker count.
//!
//! Distances come either from full enumeration or from an information-set
//! search over an F_p generator matrix (the Gray image, for the Lee weight
//! of a ring code): codewords with message weight up to w are enumerated
//! over a chain of disjoint information sets, and the round lower bound
//! sum_i max(0, w + 1 - delta_i) certifies the best weight found once it
//! crosses it.

mod infoset;

use crate::arith::RingElement;
use crate::code::{Alphabet, LinearCode};
use crate::error::{Error, Result};
use crate::gray::{gray_image_code, symbol_weight, WeightKind};
use serde::Serialize;
use std::collections::BTreeMap;

/// Budget and parallelism knobs for enumeration and search.
#[derive(Debug, Clone, Copy)]
pub struct EnumerationConfig {
    /// Maximum number of codewords (or search leaves) the call may visit.
    pub budget: u64,
    /// Worker threads; 0 means all available parallelism.
    pub workers: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            budget: 1 << 28,
            workers: 0,
        }
    }
}

impl EnumerationConfig {
    pub fn with_budget(budget: u64) -> Self {
        EnumerationConfig {
            budget,
            ..Default::default()
        }
    }
}

/// Exact map weight -> codeword count for one weight function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightEnumerator {
    pub kind: WeightKind,
    counts: BTreeMap<usize, u64>,
}

impl WeightEnumerator {
    fn from_histogram(kind: WeightKind, hist: Vec<u64>) -> Self {
        let counts = hist
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect();
        WeightEnumerator { kind, counts }
    }

    pub fn from_counts(kind: WeightKind, counts: BTreeMap<usize, u64>) -> Self {
        WeightEnumerator { kind, counts }
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// Compact polynomial form, e.g. `1+28z^4+198z^8+28z^12+z^16`.
    pub fn polynomial_string(&self) -> String {
        let mut parts = Vec::with_capacity(self.counts.len());
        for (&w, &c) in &self.counts {
            parts.push(match (w, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "z".to_string(),
                (1, c) => format!("{c}z"),
                (w, 1) => format!("z^{w}"),
                (w, c) => format!("{c}z^{w}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    /// CSV rows `weight,count` with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,count\n");
        for (w, c) in &self.counts {
            out.push_str(&format!("{w},{c}\n"));
        }
        out
    }
}

/// How a minimum distance was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    InfoSet,
}

/// Strategy selector for [`min_distance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Exhaustive below 2^26 codewords, information-set search above.
    Auto,
    Exhaustive,
    InfoSet,
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "exhaustive" => Ok(Strategy::Exhaustive),
            "infoset" => Ok(Strategy::InfoSet),
            other => Err(Error::InfosetUnsupported(format!(
                "unknown strategy {other:?}"
            ))),
        }
    }
}

/// Outcome of a minimum-distance computation. When `certified` is false the
/// true distance lies in `[lower_bound, d]`; `d` is always the weight of a
/// real codeword.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub d: usize,
    pub method: Method,
    pub certified: bool,
    pub lower_bound: usize,
}

const AUTO_EXHAUSTIVE_LIMIT: u64 = 1 << 26;

fn code_size(code: &LinearCode) -> Option<u64> {
    let p = code.field().p() as u64;
    let k = code.card_exponent() as u32;
    if (k as f64) * (p as f64).log2() > 63.0 {
        return None;
    }
    p.checked_pow(k)
}

fn budget_error(code: &LinearCode, budget: u64) -> Error {
    let needed = code.card_exponent() as f64 * (code.field().p() as f64).log2();
    Error::BudgetExceeded {
        needed_log2: needed,
        budget_log2: (budget as f64).log2(),
    }
}

/// Exact weight enumerator by full enumeration of the message space.
pub fn enumerate_weights(
    code: &LinearCode,
    kind: WeightKind,
    cfg: &EnumerationConfig,
) -> Result<WeightEnumerator> {
    kind.valid_for(code.field(), code.alphabet())?;
    let total = code_size(code).filter(|&t| t <= cfg.budget);
    if total.is_none() {
        return Err(budget_error(code, cfg.budget));
    }
    let total = total.unwrap();
    let hist = match code.alphabet() {
        Alphabet::Ring => {
            let (c1, c2) = code.crt_components().expect("ring code");
            if code.field().p() == 2 {
                engine::enumerate_binary(c1, Some(c2), code.len(), kind, total, cfg.workers)
            } else {
                engine::enumerate_bytes(c1, Some(c2), code.len(), kind, total, cfg.workers)
            }
        }
        Alphabet::Field => {
            let gens = code.field_generators().expect("field code");
            if code.field().p() == 2 {
                engine::enumerate_binary(gens, None, code.len(), kind, total, cfg.workers)
            } else {
                engine::enumerate_bytes(gens, None, code.len(), kind, total, cfg.workers)
            }
        }
    };
    Ok(WeightEnumerator::from_histogram(kind, hist))
}

/// Certified minimum distance.
pub fn min_distance(
    code: &LinearCode,
    kind: WeightKind,
    strategy: Strategy,
    cfg: &EnumerationConfig,
) -> Result<DistanceReport> {
    kind.valid_for(code.field(), code.alphabet())?;
    if code.is_zero() {
        return Err(Error::ZeroCode);
    }
    let exhaustive_fits = code_size(code)
        .map(|t| t <= AUTO_EXHAUSTIVE_LIMIT)
        .unwrap_or(false);
    let strategy = match strategy {
        Strategy::Auto if exhaustive_fits => Strategy::Exhaustive,
        Strategy::Auto => Strategy::InfoSet,
        s => s,
    };
    match strategy {
        Strategy::Exhaustive => {
            let en = enumerate_weights(code, kind, cfg)?;
            let d = en.min_nonzero_weight().ok_or(Error::ZeroCode)?;
            Ok(DistanceReport {
                d,
                method: Method::Exhaustive,
                certified: true,
                lower_bound: d,
            })
        }
        Strategy::InfoSet => {
            let target = infoset_target(code, kind)?;
            let gens = target.field_generators().expect("field code");
            let out = infoset::search(gens, cfg.budget, cfg.workers)?;
            Ok(DistanceReport {
                d: out.best,
                method: Method::InfoSet,
                certified: out.certified,
                lower_bound: out.lower_bound.min(out.best),
            })
        }
        Strategy::Auto => unreachable!(),
    }
}

/// The F_p code whose Hamming distance equals the requested distance.
fn infoset_target(code: &LinearCode, kind: WeightKind) -> Result<LinearCode> {
    match (code.alphabet(), kind) {
        (Alphabet::Field, WeightKind::Hamming) => Ok(code.clone()),
        (Alphabet::Ring, WeightKind::Lee) => gray_image_code(code),
        (Alphabet::Ring, WeightKind::Hamming) => Err(Error::InfosetUnsupported(
            "the ring Hamming weight is not the Hamming weight of a linear image; use exhaustive"
                .into(),
        )),
        (Alphabet::Ring, WeightKind::Bachoc) => Err(Error::InfosetUnsupported(
            "the Bachoc weight is not the Hamming weight of a linear image; use exhaustive".into(),
        )),
        _ => Err(Error::InfosetUnsupported("unsupported combination".into())),
    }
}

/// Bachoc-distance facts for a Hermitian self-dual code of length n over
/// F_2 + vF_2: the bound 2(floor(n/3) + 1), the exact distance, whether the
/// code meets the bound, and whether all Hamming weights are even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremalityReport {
    pub bound: usize,
    pub d_b: usize,
    pub is_extremal: bool,
    pub is_even: bool,
}

pub fn bachoc_extremality(code: &LinearCode, cfg: &EnumerationConfig) -> Result<ExtremalityReport> {
    if code.field().p() != 2 {
        return Err(Error::RequiresCharTwo(code.field().p()));
    }
    if !code.is_hermitian_self_dual()? {
        return Err(Error::NotQrSetting {
            reason: "Bachoc extremality applies to Hermitian self-dual codes".into(),
        });
    }
    let bound = 2 * (code.len() / 3 + 1);
    let bachoc = enumerate_weights(code, WeightKind::Bachoc, cfg)?;
    let d_b = bachoc.min_nonzero_weight().ok_or(Error::ZeroCode)?;
    let hamming = enumerate_weights(code, WeightKind::Hamming, cfg)?;
    let is_even = hamming.counts().keys().all(|&w| w % 2 == 0);
    Ok(ExtremalityReport {
        bound,
        d_b,
        is_extremal: d_b == bound,
        is_even,
    })
}

/// Does the code share its Hamming weight enumerator with its Euclidean dual?
pub fn formally_self_dual(code: &LinearCode, cfg: &EnumerationConfig) -> Result<bool> {
    let own = enumerate_weights(code, WeightKind::Hamming, cfg)?;
    let dual = enumerate_weights(&code.euclidean_dual(), WeightKind::Hamming, cfg)?;
    Ok(own == dual)
}

/// Per-symbol weight lookup table indexed by the CRT pair (s, t).
fn weight_table(field: crate::arith::PrimeField, kind: WeightKind) -> Vec<u8> {
    let p = field.p();
    let mut tab = vec![0u8; (p * p) as usize];
    for s in 0..p {
        for t in 0..p {
            let x = RingElement::crt_join(field, s, t);
            tab[(s * p + t) as usize] = symbol_weight(&x, kind).expect("kind validated") as u8;
        }
    }
    tab
}

mod engine {
    //! Message-space walkers. Both walkers visit codeword 0 first (message
    //! index 0 maps to the zero word) and touch every message exactly once.

    use super::weight_table;
    use crate::gray::WeightKind;
    use crate::matrix::FpMatrix;
    use rayon::prelude::*;

    fn run_pooled<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
        if workers == 0 {
            f()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("thread pool")
                .install(f)
        }
    }

    fn chunk_ranges(total: u64, workers: usize) -> Vec<(u64, u64)> {
        let par = if workers == 0 {
            rayon::current_num_threads().max(1) as u64
        } else {
            workers as u64
        };
        let chunks = (par * 8).min(total).max(1);
        (0..chunks)
            .map(|i| (i * total / chunks, (i + 1) * total / chunks))
            .collect()
    }

    fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    }

    /// Characteristic 2: rows packed into u64 words, messages in binary
    /// reflected Gray order so every step is one XOR.
    pub(super) fn enumerate_binary(
        c1: &FpMatrix,
        c2: Option<&FpMatrix>,
        n: usize,
        kind: WeightKind,
        total: u64,
        workers: usize,
    ) -> Vec<u64> {
        assert!(n <= 64);
        let pack = |m: &FpMatrix| -> Vec<u64> {
            m.rows()
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .fold(0u64, |acc, (j, &x)| acc | ((x as u64 & 1) << j))
                })
                .collect()
        };
        let rows2: Vec<u64> = c2.map(pack).unwrap_or_default();
        let rows1: Vec<u64> = pack(c1);
        let k2 = rows2.len();
        let hist_len = 2 * n + 2;
        let is_ring = c2.is_some();
        let work = |range: (u64, u64)| -> Vec<u64> {
            let mut hist = vec![0u64; hist_len];
            let (start, end) = range;
            let g = start ^ (start >> 1);
            let mut w2 = 0u64;
            let mut w1 = 0u64;
            for bit in 0..(k2 + rows1.len()) {
                if g >> bit & 1 == 1 {
                    if bit < k2 {
                        w2 ^= rows2[bit];
                    } else {
                        w1 ^= rows1[bit - k2];
                    }
                }
            }
            let weight = |w1: u64, w2: u64| -> usize {
                if is_ring {
                    match kind {
                        WeightKind::Lee => (w1.count_ones() + w2.count_ones()) as usize,
                        WeightKind::Hamming => (w1 | w2).count_ones() as usize,
                        WeightKind::Bachoc => {
                            ((w1 & w2).count_ones() + 2 * (w1 ^ w2).count_ones()) as usize
                        }
                    }
                } else {
                    w1.count_ones() as usize
                }
            };
            let mut t = start;
            loop {
                hist[weight(w1, w2)] += 1;
                t += 1;
                if t == end {
                    break;
                }
                let bit = t.trailing_zeros() as usize;
                if bit < k2 {
                    w2 ^= rows2[bit];
                } else {
                    w1 ^= rows1[bit - k2];
                }
            }
            hist
        };
        run_pooled(workers, || {
            chunk_ranges(total, workers)
                .into_par_iter()
                .map(work)
                .reduce(|| vec![0u64; hist_len], merge)
        })
    }

    /// Odd characteristic: byte rows, messages in reflected p-ary Gray order
    /// so every step adds or subtracts one generator row.
    pub(super) fn enumerate_bytes(
        c1: &FpMatrix,
        c2: Option<&FpMatrix>,
        n: usize,
        kind: WeightKind,
        total: u64,
        workers: usize,
    ) -> Vec<u64> {
        let field = c1.field();
        let p = field.p() as u8;
        let to_bytes = |m: &FpMatrix| -> Vec<Vec<u8>> {
            m.rows()
                .iter()
                .map(|r| r.iter().map(|&x| x as u8).collect())
                .collect()
        };
        let rows1 = to_bytes(c1);
        let rows2: Vec<Vec<u8>> = c2.map(to_bytes).unwrap_or_default();
        let k1 = rows1.len();
        let k = k1 + rows2.len();
        let is_ring = c2.is_some();
        let tab = weight_table(field, kind);
        let hist_len = 2 * n + 2;
        let work = |range: (u64, u64)| -> Vec<u64> {
            let (start, end) = range;
            let mut hist = vec![0u64; hist_len];
            // plain base-p digits of the start index
            let mut digits = vec![0u8; k.max(1)];
            let mut rem = start;
            for d in digits.iter_mut() {
                *d = (rem % p as u64) as u8;
                rem /= p as u64;
            }
            // reflected Gray digits: g_i = d_i when the digit sum above i is
            // even, p-1-d_i otherwise
            let mut word1 = vec![0u8; n];
            let mut word2 = vec![0u8; n];
            for i in 0..k {
                let par: u32 = digits[i + 1..].iter().map(|&d| d as u32).sum();
                let g = if par % 2 == 0 {
                    digits[i]
                } else {
                    p - 1 - digits[i]
                };
                if g != 0 {
                    let (target, row) = if i < k1 {
                        (&mut word1, &rows1[i])
                    } else {
                        (&mut word2, &rows2[i - k1])
                    };
                    for (t, &r) in target.iter_mut().zip(row) {
                        let s = *t as u32 + (g as u32 * r as u32) % p as u32;
                        *t = (s % p as u32) as u8;
                    }
                }
            }
            let weigh = |w1: &[u8], w2: &[u8]| -> usize {
                if is_ring {
                    let p = p as usize;
                    w1.iter()
                        .zip(w2)
                        .map(|(&s, &t)| tab[s as usize * p + t as usize] as usize)
                        .sum()
                } else {
                    w1.iter().filter(|&&x| x != 0).count()
                }
            };
            let mut t = start;
            loop {
                hist[weigh(&word1, &word2)] += 1;
                t += 1;
                if t == end {
                    break;
                }
                // ripple-increment the plain counter; exactly one Gray digit
                // moves by +-1
                let mut i = 0;
                while digits[i] == p - 1 {
                    digits[i] = 0;
                    i += 1;
                }
                digits[i] += 1;
                let par: u32 = digits[i + 1..].iter().map(|&d| d as u32).sum();
                let plus = par % 2 == 0;
                let (target, row) = if i < k1 {
                    (&mut word1, &rows1[i])
                } else {
                    (&mut word2, &rows2[i - k1])
                };
                if plus {
                    for (t, &r) in target.iter_mut().zip(row) {
                        let s = *t + r;
                        *t = if s >= p { s - p } else { s };
                    }
                } else {
                    for (t, &r) in target.iter_mut().zip(row) {
                        let s = *t + p - r;
                        *t = if s >= p { s - p } else { s };
                    }
                }
            }
            hist
        };
        run_pooled(workers, || {
            chunk_ranges(total, workers)
                .into_par_iter()
                .map(work)
                .reduce(|| vec![0u64; hist_len], merge)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::code::field_words;
    use crate::cyclic::{FpPoly, RingPoly};
    use crate::qr::{qr_family, QrCode};

    fn cfg() -> EnumerationConfig {
        EnumerationConfig::default()
    }

    #[test]
    fn repetition_code_enumerators() {
        let field = PrimeField::new(2).unwrap();
        let h = FpPoly::all_ones(field, 7);
        let code = LinearCode::from_cyclic_poly(&RingPoly::from_crt(&h, &h).unwrap());
        // words: 0, h, vh, (1+v)h
        let lee = enumerate_weights(&code, WeightKind::Lee, &cfg()).unwrap();
        assert_eq!(lee.count(0), 1);
        assert_eq!(lee.count(14), 1); // all-ones word
        assert_eq!(lee.count(7), 2); // all-v and all-(1+v)
        assert_eq!(lee.total(), 4);
        let ham = enumerate_weights(&code, WeightKind::Hamming, &cfg()).unwrap();
        assert_eq!(ham.count(7), 3);
        let bach = enumerate_weights(&code, WeightKind::Bachoc, &cfg()).unwrap();
        assert_eq!(bach.count(7), 1);
        assert_eq!(bach.count(14), 2);
    }

    #[test]
    fn enumerator_totals_match_cardinality() {
        for (p, q) in [(2u32, 7u32), (3, 11), (7, 3)] {
            let fam = qr_family(p, q).unwrap();
            let code = fam.code(QrCode::Q1Prime);
            let lee = enumerate_weights(&code, WeightKind::Lee, &cfg()).unwrap();
            let expected = (p as u64).pow(code.card_exponent() as u32);
            assert_eq!(lee.total(), expected);
            assert_eq!(lee.count(0), 1);
        }
    }

    #[test]
    fn lee_enumerator_matches_gray_image_hamming() {
        for (p, q) in [(2u32, 7u32), (3, 11)] {
            let fam = qr_family(p, q).unwrap();
            let code = fam.code(QrCode::Q1);
            let lee = enumerate_weights(&code, WeightKind::Lee, &cfg()).unwrap();
            let img = gray_image_code(&code).unwrap();
            let ham = enumerate_weights(&img, WeightKind::Hamming, &cfg()).unwrap();
            assert_eq!(lee.counts(), ham.counts());
        }
    }

    #[test]
    fn binary_lee_matches_component_convolution() {
        // independent route: the Lee weight in characteristic 2 is the sum
        // of the component Hamming weights, so the enumerator is the
        // convolution of the component enumerators
        let fam = qr_family(2, 7).unwrap();
        let ext = fam.extend(QrCode::Q1).unwrap();
        let (c1, c2) = ext.crt_components().unwrap();
        let mut conv = vec![0u64; 2 * ext.len() + 1];
        let wt = |w: &[u32]| w.iter().filter(|&&x| x != 0).count();
        for u in field_words(c1) {
            for v in field_words(c2) {
                conv[wt(&u) + wt(&v)] += 1;
            }
        }
        let lee = enumerate_weights(&ext, WeightKind::Lee, &cfg()).unwrap();
        for (w, &c) in conv.iter().enumerate() {
            assert_eq!(lee.count(w), c);
        }
    }

    #[test]
    fn parallel_worker_counts_agree() {
        let fam = qr_family(3, 11).unwrap();
        let code = fam.code(QrCode::Q1);
        let base = enumerate_weights(
            &code,
            WeightKind::Lee,
            &EnumerationConfig {
                budget: 1 << 28,
                workers: 1,
            },
        )
        .unwrap();
        for workers in [2usize, 8] {
            let other = enumerate_weights(
                &code,
                WeightKind::Lee,
                &EnumerationConfig {
                    budget: 1 << 28,
                    workers,
                },
            )
            .unwrap();
            assert_eq!(base, other);
        }
    }

    #[test]
    fn budget_refusal_carries_estimate() {
        let fam = qr_family(3, 11).unwrap();
        let code = fam.code(QrCode::Q1);
        let err = enumerate_weights(&code, WeightKind::Lee, &EnumerationConfig::with_budget(16))
            .unwrap_err();
        match err {
            Error::BudgetExceeded {
                needed_log2,
                budget_log2,
            } => {
                assert!(needed_log2 > 18.0 && needed_log2 < 20.0);
                assert!((budget_log2 - 4.0).abs() < 1e-9);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn zero_code_has_no_distance() {
        let z = LinearCode::zero(PrimeField::new(3).unwrap(), 5, Alphabet::Ring);
        assert_eq!(
            min_distance(&z, WeightKind::Lee, Strategy::Auto, &cfg()).unwrap_err(),
            Error::ZeroCode
        );
    }

    #[test]
    fn infoset_agrees_with_exhaustive_on_small_codes() {
        for (p, q) in [(2u32, 7u32), (3, 11), (3, 13), (7, 3)] {
            let fam = qr_family(p, q).unwrap();
            for which in [QrCode::Q1, QrCode::Q1Prime] {
                let code = fam.code(which);
                let ex =
                    min_distance(&code, WeightKind::Lee, Strategy::Exhaustive, &cfg()).unwrap();
                let is = min_distance(&code, WeightKind::Lee, Strategy::InfoSet, &cfg()).unwrap();
                assert!(is.certified);
                assert_eq!(ex.d, is.d, "({p},{q}) {which:?}");
            }
        }
    }

    #[test]
    fn infoset_rejected_for_bachoc() {
        let fam = qr_family(2, 7).unwrap();
        let code = fam.code(QrCode::Q1);
        assert!(matches!(
            min_distance(&code, WeightKind::Bachoc, Strategy::InfoSet, &cfg()),
            Err(Error::InfosetUnsupported(_))
        ));
    }

    #[test]
    fn extremality_requires_hermitian_self_dual() {
        let fam = qr_family(2, 7).unwrap();
        let q1 = fam.code(QrCode::Q1);
        assert!(bachoc_extremality(&q1, &cfg()).is_err());
        let fam3 = qr_family(3, 11).unwrap();
        assert!(matches!(
            bachoc_extremality(&fam3.code(QrCode::Q1), &cfg()),
            Err(Error::RequiresCharTwo(3))
        ));
    }

    #[test]
    fn self_dual_codes_are_formally_self_dual() {
        let fam = qr_family(2, 7).unwrap();
        let ext = fam.extend(QrCode::Q1).unwrap();
        assert!(ext.is_self_dual());
        assert!(formally_self_dual(&ext, &cfg()).unwrap());
    }

    #[test]
    fn gray_walk_matches_direct_enumeration_on_random_ring_codes() {
        // independent route: decode every plain message index, reconstruct
        // the ring word coordinatewise, and weigh it through the public
        // symbol tables
        let mut rng = 2024u64;
        let mut next = || {
            rng = rng
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (rng >> 33) as u32
        };
        for p in [2u32, 3, 5] {
            let field = PrimeField::new(p).unwrap();
            for _ in 0..6 {
                let n = 4 + (next() % 4) as usize;
                let poly = RingPoly::new(
                    field,
                    (0..n)
                        .map(|_| crate::arith::RingElement::new(field, next() % p, next() % p))
                        .collect(),
                )
                .unwrap();
                let code = LinearCode::from_cyclic_poly(&poly);
                if (p as u64).pow(code.card_exponent() as u32) > 1 << 16 {
                    continue;
                }
                let words = code.ring_codewords().unwrap();
                for kind in [WeightKind::Hamming, WeightKind::Lee, WeightKind::Bachoc] {
                    if kind == WeightKind::Bachoc && p != 2 {
                        continue;
                    }
                    let mut direct = std::collections::BTreeMap::new();
                    for w in &words {
                        *direct
                            .entry(crate::gray::word_weight(w, kind).unwrap())
                            .or_insert(0u64) += 1;
                    }
                    let engine = enumerate_weights(&code, kind, &cfg()).unwrap();
                    assert_eq!(engine.counts(), &direct, "p = {p}, n = {n}, {kind}");
                }
            }
        }
    }

    #[test]
    fn infoset_matches_exhaustive_on_random_field_codes() {
        let mut rng = 777u64;
        let mut next = || {
            rng = rng
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (rng >> 33) as u32
        };
        for p in [2u32, 3, 5] {
            let field = PrimeField::new(p).unwrap();
            for _ in 0..10 {
                let n = 10 + (next() % 6) as usize;
                let k = 2 + (next() % 5) as usize;
                let rows: Vec<Vec<u32>> = (0..k)
                    .map(|_| (0..n).map(|_| next() % p).collect())
                    .collect();
                let code =
                    LinearCode::from_field_matrix(crate::matrix::FpMatrix::new(field, n, rows));
                if code.is_zero() {
                    continue;
                }
                let ex = enumerate_weights(&code, WeightKind::Hamming, &cfg())
                    .unwrap()
                    .min_nonzero_weight()
                    .unwrap();
                let rep =
                    min_distance(&code, WeightKind::Hamming, Strategy::InfoSet, &cfg()).unwrap();
                assert!(rep.certified);
                assert_eq!(rep.d, ex, "p = {p}, n = {n}, k = {}", code.card_exponent());
            }
        }
    }

    #[test]
    fn binary_hamming_and_lee_distances_split_over_components() {
        // for p = 2 both distances equal the smaller component distance
        let fam = qr_family(2, 7).unwrap();
        for which in [QrCode::Q1, QrCode::Q1Prime] {
            let code = fam.code(which);
            let d_h = min_distance(&code, WeightKind::Hamming, Strategy::Exhaustive, &cfg())
                .unwrap()
                .d;
            let d_l = min_distance(&code, WeightKind::Lee, Strategy::Exhaustive, &cfg())
                .unwrap()
                .d;
            let (c1, c2) = code.crt_components().unwrap();
            let comp_min = [c1, c2]
                .iter()
                .map(|m| {
                    field_words(m)
                        .iter()
                        .map(|w| w.iter().filter(|&&x| x != 0).count())
                        .filter(|&w| w > 0)
                        .min()
                        .unwrap()
                })
                .min()
                .unwrap();
            assert_eq!(d_h, comp_min);
            assert_eq!(d_l, comp_min);
        }
    }

    #[test]
    fn polynomial_string_format() {
        let mut counts = BTreeMap::new();
        counts.insert(0, 1u64);
        counts.insert(4, 28);
        counts.insert(16, 1);
        let e = WeightEnumerator::from_counts(WeightKind::Lee, counts);
        assert_eq!(e.polynomial_string(), "1+28z^4+z^16");
        assert_eq!(e.to_csv(), "weight,count\n0,1\n4,28\n16,1\n");
    }
}
