use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected}, got {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("bidegree mismatch: expected ({0}, {1}), got ({2}, {3})")]
    Bidegree(usize, usize, usize, usize),

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("polyhedron is empty")]
    Empty,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("lattice is not contained in the span of the super-lattice")]
    NotInSpan,

    #[error("lattice is contained in the span but not in the super-lattice")]
    NotSublattice,

    #[error("not a facet: {0}")]
    NotAFacet(String),

    #[error("contraction position {position} out of range for bidegree ({p}, {q})")]
    Position { position: usize, p: usize, q: usize },

    #[error("form is not symmetric")]
    NotSymmetric,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("incompatible truncation: {0}")]
    Truncation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
