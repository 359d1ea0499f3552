use thiserror::Error;

/// Errors raised by group construction, graph construction and the searches.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("operation requires a nonempty set")]
    EmptySet,

    #[error("element {element} is outside the universe 0..{universe}")]
    OutOfRange { element: usize, universe: usize },

    #[error("relation is not reflexive: vertex {0} is not in its own neighborhood")]
    NotReflexive(usize),

    #[error("relation is not {0}-separable")]
    NotSeparable(usize),

    #[error("budget exceeded: {what} needs {actual}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
