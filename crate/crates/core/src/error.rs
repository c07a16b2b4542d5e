use alloc::string::String;

use crate::ops::OpKind;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotATreeReason {
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    Disconnected,
    Cycle,
}

impl core::fmt::Display for NotATreeReason {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            NotATreeReason::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            NotATreeReason::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            NotATreeReason::Disconnected => f.write_str("graph is disconnected"),
            NotATreeReason::Cycle => f.write_str("graph contains a cycle"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("empty input")]
    EmptyInput,
    #[error("not a tree: {0}")]
    NotATree(NotATreeReason),
    #[error("vertex {vertex} out of range for a tree of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("undefined: {0}")]
    Undefined(&'static str),
    #[error("order {n} exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("set is not a total co-independent dominating set")]
    NotATcoiSet,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("bad family specification: {0}")]
    BadSpec(String),
    #[error("precondition of {op} violated at vertex {vertex}")]
    PreconditionViolated { op: OpKind, vertex: usize },
    #[error("certificate step {index} is invalid: {reason}")]
    InvalidStep { index: usize, reason: String },
    #[error("replayed tree is not isomorphic to the target")]
    Mismatch,
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
