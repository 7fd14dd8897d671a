use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },

    #[error("invalid edge ({u}, {v}) for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("invalid construction: {0}")]
    Construction(String),

    #[error("graph is disconnected; games are only defined on connected graphs")]
    Disconnected,

    #[error("graph contains a triangle")]
    NotTriangleFree,

    #[error("graph has a universal vertex")]
    UniversalVertex,

    #[error("invalid face {index}: {reason}")]
    InvalidFace { index: usize, reason: String },

    #[error("state space of {required} states exceeds the budget of {budget} states")]
    Budget { required: u64, budget: u64 },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("illegal move in round {round}: {reason}")]
    IllegalMove { round: usize, reason: String },

    #[error("certificate does not re-validate: {0}")]
    Certificate(String),
}
