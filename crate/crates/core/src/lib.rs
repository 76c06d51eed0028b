//! Operator algebra engine for quantum mechanics on the fuzzy space R³_λ
//! with magnetic-monopole sectors.
//!
//! Everything is built on a truncated two-mode Fock space:
//!
//! * [`fock`]: occupation basis and ladder matrices,
//! * [`ncspace`]: fuzzy coordinates `x_i` and radius `r`,
//! * [`sector`]: the monopole Hilbert spaces `H_κ` with the weighted inner product,
//! * [`algebra`]: left/right ladder superoperators, radial calculus, the su(2,2)
//!   generators `Ŝ_AB` and the shift-commutator identities,
//! * [`monopole`]: velocity operators, `Û`/`Û†` bi-spinors, field strength and the
//!   associator,
//! * [`verify`]: identity registry, suite runner and report emission.
//!
//! Every identity is compared on a guarded window of sector blocks, on which both
//! sides are free of truncation error (see [`residual::Window`]).

pub mod algebra;
pub mod conventions;
pub mod error;
pub mod fock;
pub mod monopole;
pub mod ncspace;
pub mod parallel;
pub mod residual;
pub mod sector;
pub mod verify;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);
pub(crate) const I: C64 = C64::new(0.0, 1.0);
