//! Graph data model and structural machinery shared by the whole toolkit:
//! simple undirected graphs with optional rotation systems, exact and
//! heuristic width computations, tree decompositions (plain and nice),
//! clique expressions, and embedding validation.

pub mod cliqueexpr;
pub mod embedding;
pub mod format;
pub mod fvs;
pub mod graph;
pub mod params;
pub mod planarity;
pub mod treedec;
pub mod width;

pub use cliqueexpr::CliqueExpression;
pub use embedding::Embedding;
pub use graph::Graph;
pub use params::ParameterVector;
pub use treedec::{NiceNodeKind, NiceTreeDecomposition, TreeDecomposition};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("no embedding given")]
    MissingRotation,
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid clique expression: {0}")]
    InvalidExpression(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("input is not a tree")]
    NotATree,
    #[error("input is not a forest")]
    NotAForest,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;
