use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: edge references unknown state `{state}`")]
    UnknownState { line: usize, state: String },

    #[error("line {line}: edge references unknown letter `{letter}`")]
    UnknownLetterInEdge { line: usize, letter: String },

    #[error("line {line}: duplicate edge")]
    DuplicateEdge { line: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("graph presents the empty subshift")]
    EmptySubshift,

    #[error("budget exceeded: {what} needs {requested}, limit is {limit}")]
    Budget {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("word `{0}` is not in the language")]
    NotInLanguage(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("answer depends on gap values beyond the search cutoff {cutoff} (query length {length})")]
    CutoffExceeded { length: usize, cutoff: u64 },

    #[error("separator `{0}` already belongs to the base alphabet")]
    SeparatorCollision(String),

    #[error("extender sets have no exact classifier; use a depth-limited profile")]
    ExtenderNotExact,
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::CutoffExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
