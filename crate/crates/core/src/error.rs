use thiserror::Error;

/// Errors produced by the combinatorial constructors and counters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("two arcs share the {side} endpoint {point}")]
    DuplicateEndpoint { side: &'static str, point: usize },
    #[error("endpoint {point} lies outside [1, {n}]")]
    OutOfRange { point: usize, n: usize },
    #[error("components clash at {side} endpoint {point}")]
    EndpointClash { side: &'static str, point: usize },
    #[error("color {color} is outside [1, {r}]")]
    ColorOutOfRange { color: usize, r: usize },
    #[error("sequence contains the repeated entry {0}")]
    DuplicateEntry(usize),
    #[error("not a tableau: {0}")]
    NotATableau(String),
    #[error("not a matching: {0}")]
    NotAMatching(String),
    #[error("diagonal profile is not realized by any partition")]
    InvalidProfile,
    #[error("matching pair does not encode a permutation: {0}")]
    NotAPermutationPair(String),
    #[error("invalid colored permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid tangled diagram: {0}")]
    InvalidTangledDiagram(String),
    #[error("matching is not the inflation of a tangled diagram: {0}")]
    NotAnInflation(String),
    #[error("multigraph needs j >= 2 and k >= 2 (got j={j}, k={k})")]
    BoundsTooSmall { j: usize, k: usize },
    #[error("sequence of length {len} is too short for a recurrence of order {order}")]
    SequenceTooShort { len: usize, order: usize },
    #[error("need more than {needed} terms to fit, got {len}")]
    InsufficientData { len: usize, needed: usize },
    #[error("input size {n} exceeds the brute-force limit {limit}")]
    Infeasible { n: usize, limit: usize },
    #[error("invalid generating function: {0}")]
    InvalidGeneratingFunction(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
