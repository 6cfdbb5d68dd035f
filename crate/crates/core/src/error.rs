use thiserror::Error;

use crate::planarity::HypothesisFailure;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {0}-{1} is not present")]
    EdgeNotPresent(usize, usize),
    #[error("size limit exceeded: n = {n}, limit {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("k = {k} out of range for n = {n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("matching is not maximum: augmenting path from left vertex {0}")]
    MatchingNotMaximum(usize),
    #[error("matching does not saturate both sides")]
    NotPerfect,
    #[error("permutation fixes vertex {0}")]
    FixedPoint(usize),
    #[error("invalid violator: {0}")]
    InvalidViolator(String),
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(HypothesisFailure),
    #[error("graph is not {k}-{{1,2}}-factor-critical")]
    NotCritical { k: usize },
    #[error("unknown context: {0}")]
    UnknownContext(String),
    #[error("contradiction detected: {0}")]
    ContradictionDetected(String),
    #[error("stream parse error on line {line}: {reason}")]
    StreamParse { line: usize, reason: String },
    #[error("unknown campaign or hunt: {0}")]
    UnknownCampaign(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
