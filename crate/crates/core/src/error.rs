use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    /// A desk-scale enumeration limit was hit.
    #[error("{what}: guard exceeded (requested {requested}, limit {limit})")]
    GuardExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("inequality {index} is violated by vertex {vertex}")]
    InvalidCandidate { index: usize, vertex: usize },
    #[error("polytope is not centered: {0}")]
    NotCentered(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// An internal consistency check failed. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn guard(what: &'static str, requested: u64, limit: u64) -> Result<()> {
    if requested > limit {
        Err(Error::GuardExceeded {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
