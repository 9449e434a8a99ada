use alloc::string::String;

use crate::dynkin::Family;

/// Errors raised by the arrangement engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Dynkin type {family}{rank}")]
    InvalidType { family: Family, rank: usize },
    #[error("node {node} is not a node of a rank-{rank} diagram")]
    UnknownNode { node: usize, rank: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("every node is contracted; the arrangement would live in dimension 0")]
    EmptySurvivingSet,
    #[error("window radius must be positive")]
    NonPositiveRadius,
    #[error("invalid hyperplane: {0}")]
    InvalidHyperplane(String),
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("cannot take the product of arrangements of different kinds")]
    MixedKinds,
    #[error("no generic seed point fits inside the window")]
    WindowTooSmall,
    #[error("unknown chamber {0}")]
    UnknownChamber(usize),
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("invalid chamber graph: {0}")]
    InvalidGraph(String),
    #[error("paths do not compose")]
    NonComposable,
    #[error("chamber {to} is unreachable from chamber {from}")]
    Unreachable { from: usize, to: usize },
    #[error("enumeration exceeded the cap of {cap}")]
    Overflow { cap: usize },
    #[error("mutation label has {label} slots but the chamber has {walls} walls")]
    LabelMismatch { label: usize, walls: usize },
    #[error("no group element assigned to edge {0}")]
    MissingEdgeAssignment(usize),
    #[error("words start at different base chambers")]
    BaseMismatch,
    #[error("words end at different chambers")]
    EndpointMismatch,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
