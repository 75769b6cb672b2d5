use thiserror::Error;

use crate::complex::Simplex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("simplex {simplex} is missing its face {face}")]
    MissingFace { simplex: Simplex, face: Simplex },
    #[error("vertex {vertex} is out of range (vertex count {count})")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("simplex {0} is listed more than once")]
    DuplicateSimplex(Simplex),
    #[error("simplex has a repeated vertex {0}")]
    RepeatedVertex(usize),
    #[error("empty simplex")]
    EmptySimplex,
    #[error("coordinate list has {found} entries, expected {expected}")]
    CoordinateCount { expected: usize, found: usize },
    #[error("vertex {vertex} has ambient dimension {found}, expected {expected}")]
    AmbientDimension { vertex: usize, expected: usize, found: usize },
    #[error("vertex image array has length {found}, expected {expected}")]
    ImageCountMismatch { expected: usize, found: usize },
    #[error("map is not simplicial: image of {0} is not a simplex of the codomain")]
    NotSimplicial(Simplex),
    #[error("map is not monotone on simplex {0} for the chosen vertex orders")]
    NonMonotoneMap(Simplex),
    #[error("vertex order has length {found}, expected a permutation of {expected} vertices")]
    InvalidOrder { expected: usize, found: usize },
    #[error("function has {found} values for {expected} vertices")]
    ValueCountMismatch { expected: usize, found: usize },
    #[error("{0} is not a simplex of the codomain")]
    UnknownSimplex(Simplex),
    #[error("relation is not a partial order: cycle through element {0}")]
    CyclicRelation(usize),
    #[error("fiber power exceeds the cell cap of {cap}")]
    BudgetExceeded { cap: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("zero polynomial at position {0}")]
    ZeroPolynomial(usize),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("unknown fixture {0}")]
    UnknownFixture(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
}
