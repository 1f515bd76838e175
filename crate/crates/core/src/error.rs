use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("division is not exact")]
    InexactDivision,

    #[error("arity mismatch: expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("polynomial has degree zero in `{0}`")]
    DegreeZero(String),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("singular matrix")]
    SingularMatrix,

    #[error("solution set is positive-dimensional")]
    PositiveDimensional,

    #[error("no proper projection found after {0} shears")]
    ShearExhausted(usize),

    #[error("curves share a common component")]
    CommonComponent,

    #[error("point does not lie on the curve")]
    NotOnCurve,

    #[error("point is a smooth point of the curve")]
    SmoothPoint,

    #[error("pencil member is singular: {0}")]
    SingularMember(String),

    #[error("exceptional pencil parameter: {0}")]
    ExceptionalParameter(String),

    #[error("degenerate correspondence between line pencils")]
    DegenerateCorrespondence,

    #[error("dual curve validation failed: {0}")]
    DualValidation(String),

    #[error("inadmissible profile: {0}")]
    Inadmissible(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid pencil parameter: {0}")]
    InvalidLambda(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
