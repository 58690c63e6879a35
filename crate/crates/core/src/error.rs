use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("exp requires vanishing constant term")]
    ExpNonzeroConstant,

    #[error("log requires constant term 1")]
    LogConstantNotOne,

    #[error("series of order {order} must have {} coefficients, got {got}", order + 1)]
    CoefficientCount { order: usize, got: usize },

    #[error("bivariate polynomial has y-order {yorder}, need at least {required}")]
    InsufficientYOrder { yorder: usize, required: usize },

    #[error("bivariate polynomial must have at least one y-coefficient")]
    EmptyBivariate,

    #[error("{what} exceeds bound: n = {n}, bound = {bound}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("invalid rational literal {0:?}")]
    RationalParse(String),

    #[error("rational denominator must be non-zero")]
    ZeroDenominator,

    #[error("invalid boson word at position {position}: {message}")]
    WordParse { position: usize, message: String },

    #[error("moment sequence must start with W_0 = 1")]
    MomentsNotNormalized,

    #[error("partition function requires beta_eps > 0, got {0}")]
    NonpositiveBetaEps(f64),

    #[error("multiplicity matrix has a zero {kind} at index {index}")]
    ZeroLine { kind: &'static str, index: usize },

    #[error("multiplicity matrix rows have unequal lengths")]
    RaggedMatrix,

    #[error("set partitions must partition the same ground set: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("blocks do not form a partition of 1..={n}: {message}")]
    InvalidPartition { n: usize, message: String },

    #[error("no {which} weight for degree {degree}; supply at least {degree} entries")]
    MissingWeight { which: &'static str, degree: usize },

    #[error("morphism is not defined on the grade-{grade} generator {descriptor}")]
    PartialMorphism { grade: usize, descriptor: String },

    #[error("invalid descriptor: {0}")]
    BadDescriptor(String),
}

pub type Result<T> = std::result::Result<T, Error>;
