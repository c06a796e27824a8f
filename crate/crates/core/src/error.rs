use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partite spec: {0}")]
    InvalidSpec(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("{what} exceeds the size limit ({size} > {limit})")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("monomial ideal is not squarefree")]
    NotSquarefree,
    #[error("quotient by the unit ideal is the zero module")]
    ZeroModule,
    #[error("path construction failed: {0}")]
    Construction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
