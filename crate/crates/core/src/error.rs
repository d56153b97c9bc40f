use thiserror::Error;

use crate::color::Color;
use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} already has degree 4")]
    DegreeViolation(VertexId),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(VertexId, VertexId),
    #[error("self loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("graph is not connected")]
    Disconnected,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("color {color} is not a candidate for edge {edge}")]
    NotACandidate { edge: EdgeId, color: Color },
    #[error("edge {0} is already colored")]
    AlreadyColored(EdgeId),
    #[error("edge {0} is not colored")]
    Uncolored(EdgeId),
    #[error("color pair ({0},{1}) must consist of two distinct colors")]
    InvalidPair(Color, Color),
    #[error("vertex {vertex} lies on a ({alpha},{beta}) bichromatic cycle")]
    OnCycle {
        vertex: VertexId,
        alpha: Color,
        beta: Color,
    },
    #[error("tuple is not in configuration A")]
    NotConfigurationA,
    #[error("color exchange closes a ({alpha},{beta}) cycle through {through}")]
    CycleCreated {
        through: VertexId,
        alpha: Color,
        beta: Color,
    },
    #[error("internal error at {tag}: {detail}")]
    Internal { tag: &'static str, detail: String },
    #[error("graph has {edges} edges, more than the oracle limit of {limit}")]
    TooLarge { edges: usize, limit: usize },
    #[error("no acyclic edge coloring with at most {0} colors")]
    Infeasible(u8),
    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("trace line {line}: {msg}")]
    Replay { line: usize, msg: String },
}

impl Error {
    pub(crate) fn internal(tag: &'static str, detail: impl Into<String>) -> Self {
        Error::Internal {
            tag,
            detail: detail.into(),
        }
    }

    pub(crate) fn precondition(detail: impl Into<String>) -> Self {
        Error::PreconditionViolated(detail.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
