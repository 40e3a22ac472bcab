use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("letter {letter:?} is not in the alphabet")]
    UnknownLetter { letter: char },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("operands are over different alphabets")]
    AlphabetMismatch,

    #[error("state {state} does not exist (automaton has {states} states)")]
    InvalidState { state: usize, states: usize },

    #[error("automaton has a cycle that is not a self-loop")]
    NotAcyclic,

    #[error("resource limit exceeded: {what} reached {limit}")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("malformed automaton document: {0}")]
    Format(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
