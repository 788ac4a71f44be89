use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the analysis pipeline.
///
/// Resource limits are split by where they arise: automaton construction
/// (`StateLimit`, `MonoidLimit`) versus word enumeration (`WordCountOverflow`,
/// `ProbeLimit`). The CLI maps the two groups to distinct exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown symbol {symbol:?}")]
    UnknownSymbol { symbol: char },

    #[error("operands use different alphabets")]
    AlphabetMismatch,

    #[error("state limit exceeded (more than {limit} states)")]
    StateLimit { limit: usize },

    #[error("monoid limit exceeded (more than {limit} elements)")]
    MonoidLimit { limit: usize },

    #[error("word count for length bound {max_len} overflows the platform count limit")]
    WordCountOverflow { max_len: usize },

    #[error("probe enumeration limit exceeded (more than {limit} words)")]
    ProbeLimit { limit: usize },

    #[error("members {left} and {right} are not separated by any suffix of length <= {bound}")]
    UnseparatedPair {
        left: String,
        right: String,
        bound: usize,
    },

    #[error("invalid DFA: {0}")]
    InvalidDfa(String),

    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),

    #[error("{0}")]
    InvalidInput(String),
}
