use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Parameters outside the regime where the path ideal objects are defined.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A caller-side precondition was violated (e.g. a facet outside the ambient set).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An enumeration would exceed its configured budget.
    #[error("resource limit: {what} needs {size} but the budget is {budget}")]
    ResourceLimit {
        what: &'static str,
        size: u128,
        budget: u128,
    },

    /// A structural fact about cycle path complexes failed to hold.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
