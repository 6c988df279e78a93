//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{j} is not coprime to the cyclotomic order {n}")]
    NotCoprime { j: i64, n: u32 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not invertible (rank {rank} of {dim})")]
    Singular { rank: usize, dim: usize },

    #[error("functional is not convolution-invertible (rank {rank} of {dim})")]
    NotConvolutionInvertible { rank: usize, dim: usize },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("map is not an automorphism of the group")]
    NotAnAutomorphism,

    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),

    #[error("degenerate cocycle: {0}")]
    DegenerateCocycle(String),

    #[error("word does not evaluate to the group identity")]
    WordNotIdentity,

    #[error("irreducible word '{0}' escapes the declared basis (rule set incomplete?)")]
    EscapesBasis(String),

    #[error("rewrite completion did not stabilize within degree bound {0}")]
    CompletionFailed(usize),

    #[error("algebra verification failed: {0}")]
    VerificationFailed(String),

    #[error("comodule algebra is not Hopf-Galois: M has rank {rank} of {dim}")]
    NotHopfGalois { rank: usize, dim: usize },

    #[error("generator twist check failed for generator '{generator}' in composition {composition}")]
    GeneratorTwistFailed { generator: String, composition: u8 },

    #[error("deformation carries no inverse Galois map T; invert M or supply a generator twist")]
    MissingInverseGalois,

    #[error("coinvariant subspace has dimension {found}, expected {expected}")]
    CoinvariantDimension { found: usize, expected: usize },

    #[error("fingerprints are not comparable: {0}")]
    IncomparableFingerprints(String),

    #[error("parent Hopf algebra is not fixed by the Galois automorphism")]
    ParentNotRational,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported schema version {0}")]
    SchemaVersion(u32),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
