use thiserror::Error;

/// Crate-wide error type. Each variant corresponds to a contract violation
/// or a data-consistency failure surfaced by one of the verification suites.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar kinds are incompatible: {0}")]
    ScalarKindMismatch(String),
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    #[error("the zero polynomial has no (1+u)-adic valuation")]
    ZeroPolynomial,
    #[error("no factorization into admissible (s,l) factors exists")]
    NoShapeFactorization,
    #[error("invalid rank parameter for {0}: {1}")]
    InvalidRank(String, String),
    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("{0} is not superspecial")]
    NotSuperspecial(String),
    #[error("the primed cell variant only exists for non simply laced types")]
    VariantUnavailable,
    #[error("opposition acts nontrivially on {0}; no class descriptor available")]
    OppositionNontrivial(String),
    #[error("search budget exceeded: group order {0} > budget {1}")]
    BudgetExceeded(u64, u64),
    #[error("verification failure: {0}")]
    VerificationFailure(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
