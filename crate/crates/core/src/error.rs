use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the variable list is empty")]
    NoVariables,
    #[error("variable label {0:?} is empty or repeated")]
    BadLabel(String),
    #[error("vertex index {index} is outside the {n}-variable universe")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("the given sets do not form an antichain")]
    NotAntichain,
    #[error("the zero ideal is not supported")]
    ZeroIdeal,
    #[error("the unit ideal is not supported")]
    UnitIdeal,
    #[error("undefined for the void or irrelevant complex")]
    VoidOrIrrelevant,
    #[error("the full simplex has the zero Stanley-Reisner ideal")]
    FullSimplex,
    #[error("the void complex has no dimension")]
    VoidComplex,
    #[error("index {i} is outside the range -1..={dim}")]
    OutOfRange { i: isize, dim: isize },
    #[error("the face is not in the complex")]
    NotAFace,
    #[error("{0} is not a prime in 2..65536")]
    NotPrime(u32),
    #[error("{n} variables exceeds the oracle cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("{count} facets exceeds the limit of {limit}")]
    TooManyFacets { count: usize, limit: usize },
    #[error("the graph has no edges")]
    EmptyGraph,
    #[error("invalid graph: {0}")]
    BadGraph(String),
    #[error("invalid family spec: {0}")]
    BadSpec(String),
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { got: usize, expected: usize },
    #[error("generators are not minimal: generator {divisor} divides generator {multiple}")]
    NotMinimal { divisor: usize, multiple: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
