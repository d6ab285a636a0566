use thiserror::Error;

/// Errors raised by the algebra engine and the problem-file front end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("generator {index} is not homogeneous (term degrees {degrees:?})")]
    Inhomogeneous { index: usize, degrees: Vec<i64> },

    #[error("element {index} has degree {degree}; a positive degree is required")]
    NonPositiveDegree { index: usize, degree: i64 },

    #[error("relation column has {found} entries, module has {expected} generators")]
    ColumnLength { expected: usize, found: usize },

    #[error("operation undefined on the zero module")]
    ZeroModule,

    #[error("ideal does not define a finite-length quotient: variable {variable} has no pure power in component {component}")]
    NotIdealOfDefinition { component: usize, variable: String },

    #[error("samuel differences did not stabilize at order {order}; increase n_max (table has {len} rows)")]
    NotStabilized { order: usize, len: usize },

    #[error("table too short: need at least {needed} rows, got {got}")]
    TableTooShort { needed: usize, got: usize },

    #[error("no system of parameters found after {tries} tries; partial chain [{}] has {} of {needed} elements", partial.join(", "), partial.len())]
    GsopExhausted { tries: usize, partial: Vec<String>, needed: usize },

    #[error("sequence is not a system of parameters: {0}")]
    NotSystemOfParameters(String),

    #[error("koszul window certification failed after {retries} retries (window {lo}..={hi})")]
    WindowCertification { retries: usize, lo: i64, hi: i64 },

    #[error("monomial ideal is the unit ideal")]
    UnitIdeal,

    #[error("{0}")]
    NotMinimalPrime(String),

    #[error("not a monomial quotient: {0}")]
    NotMonomial(String),

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
