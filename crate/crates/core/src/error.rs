use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc ({tail},{head}) is a loop")]
    Loop { tail: usize, head: usize },
    #[error("arc ({tail},{head}) appears more than once")]
    DuplicateArc { tail: usize, head: usize },
    #[error("arc ({tail},{head}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { tail: usize, head: usize, n: usize },
    #[error("order {n} exceeds the supported maximum of {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("arc ({tail},{head}) is not present")]
    MissingArc { tail: usize, head: usize },
    #[error("vertex {v} is not present in a digraph of order {n}")]
    MissingVertex { v: usize, n: usize },
    #[error("coloring covers {got} vertices but the digraph has {n}")]
    ColoringLength { got: usize, n: usize },
    #[error("color {color} at vertex {v} is outside 1..={k}")]
    ColorOutOfRange { v: usize, color: usize, k: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("operation requires a non-empty digraph")]
    Empty,
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("certificate rejected: {0}")]
    BadCertificate(String),
    #[error("check failed: {0}")]
    Violation(String),
}
