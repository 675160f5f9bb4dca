use crate::automaton::StateSet;

/// Errors raised by the toolkit.
///
/// The variants are grouped the way the command line reports them: input and
/// parse problems, domain failures (the automaton is outside the operation's
/// domain) and resource caps.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at {path}: {reason}")]
    Parse { path: String, reason: String },

    #[error("partition is not a congruence: states {p} and {q} share a class but their images under letter {letter} do not")]
    NotCongruence { p: usize, q: usize, letter: usize },

    #[error("state set is not closed: state {state} leaves it under letter {letter}")]
    NotClosed { state: usize, letter: usize },

    #[error("automaton is not synchronizing")]
    NotSynchronizing,

    #[error("subset {subset} admits no extending word")]
    NotExtensible { subset: StateSet },

    #[error("{0}")]
    Domain(String),

    #[error("{what}: {got} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        got: usize,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(path: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            reason: reason.into(),
        }
    }

    /// True for the resource-cap family of errors.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
