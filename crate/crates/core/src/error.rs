use crate::graph::{ArcId, NodeId, ValidationReport};
use crate::switching::Verdict;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("malformed input: {0}")]
    Format(String),

    #[error("unknown fragment '{0}'")]
    UnknownFragment(String),

    #[error("invalid proof-structure: {0}")]
    Invalid(ValidationReport),

    #[error("invalid proof: {0}")]
    InvalidProof(ValidationReport),

    #[error("rule not applicable: {0}")]
    Rule(String),

    #[error("polarity typing required")]
    PolarityTypingRequired,

    #[error("switching enumeration over {parrs} par nodes exceeds the cap of {cap}")]
    EnumerationCap { parrs: usize, cap: usize },

    #[error("stale redex at cut node {0}")]
    StaleRedex(NodeId),

    #[error("type mismatch on arc {0}")]
    TypeMismatch(ArcId),

    #[error("untypable structure: {0}")]
    Untypable(String),

    #[error("criterion {} fails", .0.criterion)]
    CriterionFails(Box<Verdict>),

    #[error("not (¬w⊗): premise {arc} of node {node} is the conclusion of an erasing node")]
    NotWten { node: NodeId, arc: ArcId },

    #[error("node {0} is erasing")]
    ErasingNode(NodeId),

    #[error("no such node {0}")]
    UnknownNode(NodeId),

    #[error("node {0} is a conclusion •, not a link")]
    NotALink(NodeId),

    #[error("expected exactly one output conclusion, found {0}")]
    OutputCount(usize),

    #[error("not jump-total")]
    NotJumpTotal,

    #[error("not jump-correct")]
    NotJumpCorrect,

    #[error("sequentialization got stuck: {0}")]
    Stuck(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn syntax(offset: usize, message: impl Into<String>) -> Error {
        Error::Syntax { offset, message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
