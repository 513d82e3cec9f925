use thiserror::Error;

/// Errors raised by constructors and guarded computations.
///
/// Failed mathematical checks are not errors: they are reported as values
/// inside the various `*Report` types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("invalid poset: cover relations contain the cycle {}", .cycle.join(" < "))]
    Cycle { cycle: Vec<String> },

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("resource guard exceeded: {what} is {actual}, limit {limit}")]
    Resource {
        what: &'static str,
        actual: u64,
        limit: u64,
    },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::Resource {
            what,
            actual: actual as u64,
            limit: limit as u64,
        })
    } else {
        Ok(())
    }
}
