use thiserror::Error;

/// Errors shared across the coefficient field, series calculus, composition
/// and the expression front-end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in the coefficient field")]
    DivisionByZero,

    #[error("operation requires a nonzero series")]
    ZeroSeries,

    #[error("exp of a constant with an E-component is outside the coefficient field")]
    ConstantNotExponentiable,

    #[error("log of this constant is not representable in the coefficient field")]
    LogConstantNotRepresentable,

    #[error("log of a non-positive value")]
    LogOfNonPositive,

    #[error("power of a non-positive series base")]
    NonPositiveBase,

    #[error("rational power of this coefficient is not representable in the coefficient field")]
    CoefficientPowerNotRepresentable,

    #[error("series argument must be small (every monomial below 1)")]
    NotSmall,

    #[error("purely large part of an exponent did not materialize within the safety bound")]
    NonRepresentableExponent,

    #[error("right composand must be a large positive transseries")]
    NotLargePositive,

    #[error("fixed-point iteration did not stabilize within the iteration cap")]
    IterationCapExceeded,

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("every large positive series solves this constant equation")]
    AmbiguousSolution,

    #[error("Taylor smallness hypothesis violated")]
    TaylorHypothesisViolated,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("comparison is inconclusive at the working budget")]
    InconclusiveAtBudget,

    #[error("syntax error at offset {offset}: {message}")]
    SyntaxError { offset: usize, message: String },

    #[error("exponent must be a rational literal")]
    ExponentNotRational,
}

pub type Result<T> = std::result::Result<T, Error>;
