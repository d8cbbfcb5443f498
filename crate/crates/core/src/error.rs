use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    /// A symbol outside the session alphabet. `position` is the character
    /// offset in the input text, when the symbol came from text.
    #[error("symbol '{symbol}' is not in the alphabet{}", .position.map(|p| format!(" (position {p})")).unwrap_or_default())]
    Alphabet {
        symbol: char,
        position: Option<usize>,
    },

    #[error("derivative closure exceeded the state budget: {discovered} states discovered")]
    StateBudgetExceeded { discovered: usize },

    #[error("bisimulation exceeded the pair budget: {explored} pairs explored")]
    PairBudgetExceeded { explored: usize },

    #[error("language slice exceeded the enumeration cap of {cap} words")]
    EnumerationBudgetExceeded { cap: usize },

    #[error("closed-form expansion requires a nonempty word")]
    EmptyWord,

    #[error("cannot take a quotient of a slice with bound 0")]
    ZeroBound,

    #[error("invalid automaton document: {0}")]
    InvalidDfa(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
