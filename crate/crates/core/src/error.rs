// SPDX-License-Identifier: MIT

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyNodeSet,
    #[error("too many nodes: {0} (at most {max})", max = crate::MAX_NODES)]
    TooManyNodes(usize),
    #[error("invalid node label {0:?}")]
    InvalidLabel(String),
    #[error("duplicate node {0:?}")]
    DuplicateNode(String),
    #[error("unknown node {0:?}")]
    UnknownNode(String),
    #[error("self-loop on node {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge between {0:?} and {1:?}")]
    DuplicateEdge(String, String),
    #[error("node subset must be nonempty")]
    EmptySubset,
    #[error("not a chain graph: directed pseudocycle {}", .cycle.join(" "))]
    NotChainGraph { cycle: Vec<String> },
    #[error("graphs are over different node sets")]
    NodeSetMismatch,
    #[error("graphs have different underlying graphs")]
    SkeletonMismatch,
    #[error("{what} bound exceeded: {actual} > {bound}")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        bound: usize,
    },
    #[error("invalid triplet: {0}")]
    InvalidTriplet(&'static str),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("nodes must be distinct")]
    NodesNotDistinct,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("section is not a section of the trail")]
    SectionNotInTrail,
    #[error("not a trail: {0}")]
    InvalidTrail(&'static str),
    #[error("conflicting orientation demanded for edge {0:?} -- {1:?}")]
    OrientationConflict(String, String),
    #[error("orientation {head:?} <- {tail:?} is banned")]
    BannedOrientation { head: String, tail: String },
    #[error("invalid ban on {0:?} -- {1:?}: not a line")]
    InvalidBan(String, String),
    #[error("input is not the pattern of a chain graph class: {0}")]
    InvalidPattern(String),
    #[error("{}:{}: {}", .line, .column, .message)]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
