use thiserror::Error;

/// Errors raised for malformed input or exhausted search budgets.
///
/// Inequality failures and infeasible constraints are never errors; they are
/// reported as data in [`crate::CheckReport`] and [`crate::EnumerationResult`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root multiset is empty")]
    EmptyRoots,
    #[error("root at position {0} is zero; roots must be nonzero integers")]
    ZeroRoot(usize),
    #[error("coefficient list is empty")]
    EmptyCoefficients,
    #[error("polynomial is not monic: leading coefficient is {0}")]
    NotMonic(String),
    #[error("{what} requires degree at least {min}, got {got}")]
    DegreeTooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("budget exceeded: {what} (budget {budget})")]
    BudgetExceeded { what: String, budget: u64 },
    #[error("{0} is outside the floating-point range")]
    FloatRange(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True for [`Error::BudgetExceeded`].
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
