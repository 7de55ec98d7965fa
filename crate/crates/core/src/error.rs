use thiserror::Error;

use crate::validation::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed automaton: {0}")]
    MalformedAutomaton(ValidationReport),
    #[error("structurally invalid automaton: {0}")]
    Structure(String),
    #[error("postselection undefined: accept and reject masses are both zero")]
    PostselectionUndefined,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("input must be non-empty")]
    EmptyInput,
    #[error("not a member: {0}")]
    NotAMember(String),
    #[error("search needs {required} certificate classes, budget is {budget}")]
    BudgetExceeded { required: String, budget: u64 },
    #[error("restart cap of {cap} passes exceeded")]
    RestartCapExceeded { cap: u64 },
    #[error("trial count must be positive")]
    EmptyTrialSet,
    #[error("infeasible at this scale: {0}")]
    InfeasibleScale(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

impl Error {
    pub(crate) fn bad(msg: impl Into<String>) -> Self {
        Error::BadParameter(msg.into())
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
