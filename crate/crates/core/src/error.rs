use thiserror::Error;

use crate::graph::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("range {lo}..={hi} out of bounds for dimension {n}")]
    RangeOutOfBounds { lo: usize, hi: usize, n: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not upper-triangular: entry ({row}, {col}) is set")]
    NotUpperTriangular { row: usize, col: usize },

    #[error("invalid vertex labels: {0}")]
    InvalidLabels(String),

    #[error("unknown vertex label {0}")]
    UnknownLabel(Label),

    #[error("vertex {0} is not looped and cannot be pressed")]
    InvalidPress(Label),

    #[error("press {position} of the sequence (vertex {vertex}) is invalid")]
    InvalidSequence { position: usize, vertex: Label },

    #[error("label {0} repeats in the pressing sequence")]
    RepeatedLabel(Label),

    #[error("ordering is not order-pressable: elimination stuck at index {stuck}")]
    NotOrderPressable { stuck: usize },

    #[error("graph is not pressable: component {component:?} has edges but no looped vertex")]
    Unpressable { component: Vec<Label> },

    #[error("graph has {n} vertices, above the bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("input is not a connected uniquely pressable graph in pressing order: {0}")]
    NotCup(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
