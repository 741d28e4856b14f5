//! Error type shared by every module in this crate.

/// Everything that can go wrong while evaluating an invariant.
///
/// The library never returns NaN or infinity to signal a problem; any
/// evaluation that cannot produce a meaningful finite value reports one of
/// these variants instead.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A point lies outside (or numerically too close to the boundary of)
    /// the domain an operation is defined on.
    #[error("point out of domain: {0}")]
    OutOfDomain(String),

    /// A Möbius map was applied at (numerically) its pole.
    #[error("Möbius map pole: |c·p + d| = {denom:e} is below 1e-300")]
    PoleHit { denom: f64 },

    /// Disk-model and half-plane-model objects were mixed in one operation.
    #[error("cannot mix disk-model and half-plane-model maps")]
    ModelMismatch,

    /// Displacement along an elliptic map is not a conjugation invariant of
    /// the point's orbit, so we refuse to compute it.
    #[error("displacement is not supported for elliptic maps")]
    EllipticUnsupported,

    /// An infinite product did not reach the truncation threshold within the
    /// configured maximum number of terms.
    #[error("product did not converge within {terms} terms (last |factor - 1| = {last_deviation:e})")]
    NonConvergent { terms: usize, last_deviation: f64 },

    /// An infinite-product factor evaluated to NaN or infinity.
    #[error("non-finite product factor at term {index}")]
    InvalidFactor { index: usize },

    /// An argument failed a structural precondition (not a domain issue):
    /// invalid tolerance, empty generator list, elliptic generator, z = 0
    /// where a prime function needs z ≠ 0, and so on.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal cross-check failed, e.g. a quantity that must be real
    /// came back with a non-negligible imaginary part.
    #[error("numerical inconsistency: {0}")]
    NumericalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
