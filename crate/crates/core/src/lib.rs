//! Fourier analysis of pitch-class sets in cyclic universes.
//!
//! A scale here is a plain subset of `Z_c`, and "maximally even" means it
//! maximizes the magnitude of one discrete Fourier coefficient of its
//! indicator function: `|F_A(d)|` over all `d`-subsets. Everything else
//! follows from that definition, checked against brute force wherever brute
//! force is feasible:
//!
//! - [`pcs`]: sets over `Z_c`, the `c:d:{...}` text format, translation /
//!   inversion / complement, periods, canonical orbit representatives.
//! - [`spectral`]: subset and integer-function DFTs, interval content, the
//!   convolution identity `DFT(IC_A) = |F_A|^2`, the hexachord theorem.
//! - [`maxeven`]: the exhaustive argmax oracle, the closed-form floor
//!   generator with exact rational offsets, membership tests, class counts,
//!   generated-scale witnesses.
//! - [`classify`]: type I/IIa/IIb/III classification by `gcd(c, d)`,
//!   reduction of periodic sets, generator search, and the constructive
//!   type III witness for every composite modulus above 12.
//! - [`properties`]: step patterns and the two-step-size law, generic
//!   interval spectra, cardinality-equals-variety, inclusion counts,
//!   angular and Euclidean distance sums, second-order selections.
//! - [`checks`]: the exhaustive verification sweeps behind `evenscale
//!   verify`.
//! - [`svg`], [`cli`]: polygon rendering and the command-line surface.

pub mod checks;
pub mod classify;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod maxeven;
pub mod pcs;
pub mod properties;
pub mod spectral;
pub mod svg;

pub use error::{Error, Result};
pub use pcs::{PitchClassSet, TranslationClass, DEFAULT_MAX_MODULUS};

/// Absolute tolerance for comparing analytically equal floating-point
/// values; integer quantities are compared exactly.
pub const TOL: f64 = 1e-9;
