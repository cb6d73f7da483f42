//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("operation requires characteristic 2, got p = {0}")]
    RequiresCharTwo(u32),
    #[error("operation requires odd characteristic, got p = 2")]
    RequiresOddChar,
    #[error("operation requires odd length, got n = {0}")]
    RequiresOddLength(usize),
    #[error("{a} is not a unit modulo {n}")]
    NotAUnit { a: u64, n: u64 },
    #[error("argument is divisible by the modulus")]
    ZeroResidue,
    #[error("not a quadratic-residue setting: {reason}")]
    NotQrSetting { reason: String },
    #[error("polynomial is not idempotent")]
    NotIdempotent,
    #[error("augmentation requires p = 2 and q = 1 mod 8, got p = {p}, q = {q}")]
    AugmentUnsupported { p: u32, q: u32 },
    #[error("weight kind not applicable here: {0}")]
    WeightUnsupported(String),
    #[error("enumeration budget exceeded: need about 2^{needed_log2:.1} codewords, budget allows 2^{budget_log2:.1}")]
    BudgetExceeded { needed_log2: f64, budget_log2: f64 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("codes live over different alphabets")]
    AlphabetMismatch,
    #[error("information-set search not applicable: {0}")]
    InfosetUnsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
