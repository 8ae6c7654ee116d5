use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The request exceeds a fixed enumeration or representation limit.
    #[error("{what}: {got} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    /// An argument does not belong to the structure it was checked against.
    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, limit: usize, got: usize) -> Self {
        Error::Capacity { what, limit, got }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
