use thiserror::Error;

/// Errors raised by graph construction and the spectral/index routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph undefined for n = {n}: Z_n has no nonzero proper ideals ({reason})")]
    Undefined { n: u64, reason: &'static str },

    #[error("ideals belong to different rings")]
    MismatchedRing,

    #[error("exponent vector {0:?} is out of range for this ring")]
    BadExponents(Vec<u32>),

    #[error("the zero ideal is not a valid argument here")]
    ZeroIdeal,

    #[error("a vertex is never adjacent to itself")]
    SameVertex,

    #[error("E(Z_{n}) has {vertices} vertices, above the cap of {cap}")]
    VertexCap { n: u64, vertices: usize, cap: usize },

    #[error("exact path limited to {cap} vertices (got {vertices}); use the numeric path")]
    ExactCap { vertices: usize, cap: usize },

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})"
    )]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("matrix is singular")]
    Singular,

    #[error("input is not the characteristic polynomial of an r-regular graph on n vertices")]
    NotRegular,

    #[error("partition defined only for squarefree n (got n = {0})")]
    NotSquarefree(u64),

    #[error("structure violation: {0}")]
    Structure(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
