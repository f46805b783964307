use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("graph is not connected")]
    DisconnectedGraph,

    #[error("broadcast radius {radius} at vertex {vertex} exceeds diameter {diameter}")]
    RadiusOutOfRange {
        vertex: usize,
        radius: u32,
        diameter: u32,
    },

    #[error("negative weight at vertex {vertex}")]
    NegativeWeight { vertex: usize },

    #[error("ball cover misses vertices {uncovered:?}")]
    IncompleteCover { uncovered: Vec<u32> },

    #[error("graph has {n} vertices, exact solver limit is {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },

    #[error("operation undefined on the single-vertex graph")]
    TrivialGraph,

    #[error("graph is not chordal")]
    NotChordal,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("malformed covering system: {0}")]
    InvalidSystem(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
