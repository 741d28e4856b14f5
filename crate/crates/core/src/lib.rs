//! Numerical invariants of hyperbolic Riemann surfaces.
//!
//! The crate computes, for a point z of a hyperbolic surface X:
//!
//! - the squeezing function S_X(z), from extremal embeddings into the disk;
//! - Fridman invariants h^k_X(z) and h^c_X(z), built from the Kobayashi and
//!   Carathéodory distances of largest embedded disks;
//! - the injectivity radius and its tanh-quarter transform;
//! - quotient invariants S/h^k and S/h^c.
//!
//! Everything reduces to hyperbolic geometry: for a surface uniformized as
//! D/Γ the Kobayashi Fridman invariant at z = π(w) is
//!
//! ```text
//! h^k(z) = tanh( min_{γ ∈ Γ, γ ≠ id} rho_D(w, γ w) / 4 )
//! ```
//!
//! so the two pillars are a stable hyperbolic-distance kernel
//! ([`hyperbolic`]) and an orbit minimizer over the deck group
//! ([`fuchsian`]). The concrete one-holed geometries with closed forms —
//! round annuli and punctured disks — live in [`domains`], where the
//! Carathéodory side is evaluated through Schottky–Klein prime-function
//! products driven by the adaptive kernel in [`numerics`].
//!
//! All routines return [`Result`]; domain violations, poles, and
//! non-convergent products surface as typed errors, never as NaN.

pub mod domains;
pub mod error;
pub mod fuchsian;
pub mod hyperbolic;
pub mod numerics;

pub use error::{Error, Result};
pub use num_complex::Complex64;
