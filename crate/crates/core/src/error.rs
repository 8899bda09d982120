use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },

    #[error("malformed permutation input at line {line}: {message}")]
    PermutationSyntax { line: usize, message: String },

    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("group of order {order} exceeds the subgroup enumeration cap of {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },

    #[error("cannot parse group spec at position {position}: {message}")]
    SpecSyntax { position: usize, message: String },

    #[error("invalid group parameters: {0}")]
    InvalidSpec(String),

    #[error("{name} is not abelian")]
    NotAbelian { name: String },

    #[error("{name} (order {order}) is not a p-group")]
    NotPGroup { name: String, order: usize },

    #[error("{name} is not cyclic")]
    NotCyclic { name: String },

    #[error("classification of maximal-cyclic groups needs a 2-group, got order {order}")]
    OddOrder { order: usize },

    #[error("ghost vector has {got} entries but the lattice has {expected} classes")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ghost vector belongs to a different subgroup lattice")]
    ForeignVector,

    #[error("minimal multiplier is undefined for the zero vector")]
    ZeroVector,

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
