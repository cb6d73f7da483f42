//! Quadratic residue codes over the ring F_p + vF_p (v^2 = v).
//!
//! The crate builds the four QR codes of a pair (p, q) from idempotent
//! generators found by search, together with their extended and augmented
//! variants, maps ring codes to p-ary codes through the Gray isometries,
//! computes exact weight enumerators and certified minimum distances, and
//! machine-checks the structural identities the family satisfies
//! (equivalence under multipliers, intersection and sum laws, cardinalities,
//! Euclidean and Hermitian duality, self-duality of extensions).
//!
//! ```
//! use qrv_core::{enumerate_weights, qr_family, EnumerationConfig, QrCode, WeightKind};
//!
//! let family = qr_family(2, 7)?;
//! let extended = family.extend(QrCode::Q1)?;
//! assert!(extended.is_self_dual());
//!
//! let lee = enumerate_weights(&extended, WeightKind::Lee, &EnumerationConfig::default())?;
//! assert_eq!(lee.polynomial_string(), "1+28z^4+198z^8+28z^12+z^16");
//! # Ok::<(), qrv_core::Error>(())
//! ```
//!
//! Modules:
//! - [`arith`]: F_p and the ring R = F_p + vF_p with its CRT splitting.
//! - [`cyclic`]: polynomials in `R[x]/(x^n - 1)`, multipliers, the
//!   x -> (1-2v)x substitution.
//! - [`qr`]: residue sets, idempotent search, the four codes, extensions,
//!   Hermitian augmentations.
//! - [`code`]: linear codes over R and F_p with canonical CRT generator
//!   pairs, duals, sums, intersections.
//! - [`gray`]: Gray maps and the Hamming, Lee and Bachoc weights.
//! - [`analysis`]: exact enumerators, exhaustive and information-set
//!   minimum-distance engines.
//! - [`verify`]: per-instance structural checks with witnesses.

pub mod analysis;
pub mod arith;
pub mod code;
pub mod cyclic;
pub mod error;
pub mod gray;
pub mod matrix;
pub mod qr;
pub mod verify;

pub use analysis::{
    bachoc_extremality, enumerate_weights, formally_self_dual, min_distance, DistanceReport,
    EnumerationConfig, ExtremalityReport, Method, Strategy, WeightEnumerator,
};
pub use arith::{is_prime, is_qr_mod, parse_ring_element, sqrt_mod_p, PrimeField, RingElement};
pub use code::{Alphabet, LinearCode};
pub use cyclic::{parse_ring_poly, FpPoly, RingPoly};
pub use error::{Error, Result};
pub use gray::{gray_binary, gray_image_code, gray_map, gray_odd, word_weight, WeightKind};
pub use qr::{
    base_idempotents, e_polys, qr_family, residue_sets, small_idempotents, AugmentUnit,
    BaseIdempotent, QRFamily, QrCode,
};
pub use verify::{
    verify_family, verify_gray_properties, verify_hermitian_family, verify_psi, verify_qr_theorems,
    PropertyReport, TheoremItem, TheoremReport,
};
