//! Information-set minimum-distance search for F_p codes.
//!
//! The generator matrix is put into systematic form on a chain of pairwise
//! disjoint column sets: each pass row-reduces the matrix using only columns
//! untouched by earlier passes, records the pivot set and its rank defect
//! delta_i = k - rank_i, and repeats until no further pivots exist. Round w
//! enumerates every codeword whose message weight is exactly w with respect
//! to each systematic matrix, normalizing the first nonzero coefficient to
//! 1 (scaling does not change weights). After a complete round the minimum
//! weight of any unseen codeword is at least sum_i max(0, w + 1 - delta_i),
//! because an unseen word needs message weight w + 1 or more in every basis
//! and the pivot columns of different sets are disjoint. The search stops
//! when that bound reaches the best weight found, when the full message
//! space has been covered, or when the leaf budget runs out (in which case
//! the result is reported uncertified).

use crate::error::{Error, Result};
use crate::matrix::FpMatrix;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy)]
pub(crate) struct InfoSetOutcome {
    /// Weight of the best (lightest non-zero) codeword seen.
    pub best: usize,
    /// Proven lower bound for unseen codewords.
    pub lower_bound: usize,
    pub certified: bool,
}

struct SystematicSet {
    rows: Vec<Vec<u8>>,
    delta: usize,
}

fn build_sets(gens: &FpMatrix) -> Vec<SystematicSet> {
    let field = gens.field();
    let k = gens.nrows();
    let n = gens.ncols();
    let mut used = vec![false; n];
    let mut work: Vec<Vec<u32>> = gens.rows().to_vec();
    let mut sets = Vec::new();
    loop {
        let mut m = work.clone();
        let mut rank = 0usize;
        let mut pivots = Vec::new();
        for c in 0..n {
            if used[c] || rank == k {
                continue;
            }
            let Some(pr) = (rank..k).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(rank, pr);
            let inv = field.inv(m[rank][c]).expect("pivot");
            if inv != 1 {
                for x in m[rank].iter_mut() {
                    *x = field.mul(*x, inv);
                }
            }
            let pivot_row = m[rank].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != rank && row[c] != 0 {
                    let fac = row[c];
                    for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                        *x = field.sub(*x, field.mul(fac, pv));
                    }
                }
            }
            pivots.push(c);
            rank += 1;
        }
        if rank == 0 {
            break;
        }
        for &c in &pivots {
            used[c] = true;
        }
        work = m.clone();
        sets.push(SystematicSet {
            rows: m
                .into_iter()
                .map(|r| r.into_iter().map(|x| x as u8).collect())
                .collect(),
            delta: k - rank,
        });
    }
    sets
}

#[inline]
fn add_row(dst: &mut [u8], src: &[u8], p: u8) {
    for (d, &s) in dst.iter_mut().zip(src) {
        let t = *d + s;
        *d = if t >= p { t - p } else { t };
    }
}

/// Weight of the scratch word, abandoning the scan once it reaches `cap`.
#[inline]
fn weight_capped(buf: &[u8], cap: usize) -> usize {
    let mut wt = 0usize;
    for &x in buf {
        wt += usize::from(x != 0);
        if wt >= cap {
            return cap;
        }
    }
    wt
}

/// Adds every combination of `depth` further rows (indices > `start - 1`,
/// coefficients 1..p) into `scratch`, recording leaf weights below `best`.
/// The p-th add of a row returns the scratch to its entry state.
fn dfs(rows: &[Vec<u8>], depth: usize, start: usize, scratch: &mut [u8], p: u8, best: &mut usize) {
    let k = rows.len();
    for idx in start..=(k - depth) {
        for _c in 1..p {
            add_row(scratch, &rows[idx], p);
            if depth == 1 {
                let wt = weight_capped(scratch, *best);
                if wt < *best {
                    *best = wt;
                }
            } else {
                dfs(rows, depth - 1, idx + 1, scratch, p, best);
            }
        }
        add_row(scratch, &rows[idx], p);
    }
}

fn round_best(set: &SystematicSet, w: usize, p: u8, best_in: usize) -> usize {
    let k = set.rows.len();
    if w > k {
        return best_in;
    }
    (0..=(k - w))
        .into_par_iter()
        .map(|first| {
            let mut local = best_in;
            // first coefficient normalized to 1
            let mut scratch = set.rows[first].clone();
            if w == 1 {
                let wt = weight_capped(&scratch, local);
                if wt < local && wt > 0 {
                    local = wt;
                }
            } else {
                dfs(&set.rows, w - 1, first + 1, &mut scratch, p, &mut local);
            }
            local
        })
        .min()
        .unwrap_or(best_in)
}

fn binom(k: usize, w: usize) -> f64 {
    let mut acc = 1.0f64;
    for i in 0..w {
        acc = acc * (k - i) as f64 / (i + 1) as f64;
    }
    acc
}

pub(crate) fn search(gens: &FpMatrix, budget: u64, workers: usize) -> Result<InfoSetOutcome> {
    let k = gens.canonical().nrows();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let p = gens.field().p();
    let sets = build_sets(&gens.canonical());
    let body = || -> InfoSetOutcome {
        let mut best = usize::MAX;
        let mut enumerated = 0u64;
        let mut lower_bound = 1usize;
        for w in 1..=k {
            let round_cost = sets.len() as f64 * binom(k, w) * ((p - 1) as f64).powi(w as i32 - 1);
            if w > 1 && enumerated as f64 + round_cost > budget as f64 {
                return InfoSetOutcome {
                    best,
                    lower_bound,
                    certified: false,
                };
            }
            for set in &sets {
                best = round_best(set, w, p as u8, best);
            }
            enumerated += round_cost as u64;
            lower_bound = sets.iter().map(|s| (w + 1).saturating_sub(s.delta)).sum();
            if lower_bound >= best || w == k {
                return InfoSetOutcome {
                    best,
                    lower_bound,
                    certified: true,
                };
            }
        }
        InfoSetOutcome {
            best,
            lower_bound,
            certified: true,
        }
    };
    if workers == 0 {
        Ok(body())
    } else {
        Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
            .install(body))
    }
}
