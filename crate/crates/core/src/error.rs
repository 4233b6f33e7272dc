use thiserror::Error;

use crate::vertex::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {n} is outside 1..={max}")]
    GroundSetSize { n: usize, max: usize },
    #[error("uniformity d = {d} must satisfy 1 <= d <= n = {n}")]
    Uniformity { n: usize, d: usize },
    #[error("circuit {circuit} has {found} vertices, expected {expected}")]
    CircuitCardinality { circuit: VertexSet, expected: usize, found: usize },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the unit ideal cannot be represented")]
    UnitIdeal,
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("generators have mixed degrees")]
    MixedDegrees,
    #[error("{value} is not prime")]
    NotPrime { value: u64 },
    #[error("skeleton dimension {r} is outside -1..={max}")]
    SkeletonDimension { r: isize, max: isize },
    #[error("{face} is not a face of the complex")]
    NotAFace { face: VertexSet },
    #[error("operation undefined for the void complex")]
    VoidComplex,
    #[error("{n} variables exceed the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("named ideal {kind} needs n >= {min}, got {n}")]
    NamedIdealTooSmall { kind: &'static str, min: usize, n: usize },
    #[error("Betti table describes the wrong module")]
    WrongSubject,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("not a 2-sphere triangulation: {0}")]
    NotATriangulation(String),
    #[error("search gave up after {nodes} nodes")]
    SearchExhausted { nodes: usize },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
