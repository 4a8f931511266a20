use thiserror::Error;

use crate::graph::VertexCoord;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid spider: {0}")]
    InvalidSpider(String),

    #[error("invalid path forest: {0}")]
    InvalidForest(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("coordinate {0} does not address a vertex of this structure")]
    CoordinateOutOfRange(VertexCoord),

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("invalid ball cover: {0}")]
    InvalidCover(String),

    #[error("ball cover leaves {uncovered} vertices uncovered")]
    IncompleteCover { uncovered: usize },

    #[error("instance of order {order} exceeds the search cap of {cap}")]
    SearchCapExceeded { order: usize, cap: usize },

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),
}
