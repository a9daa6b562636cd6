use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("divisor has degree zero in the main variable")]
    BadDivisor,
    #[error("both polynomials are constant in the elimination variable")]
    BothConstant,
    #[error("parametrization is constant in the parameter")]
    DegenerateParametrization,
    #[error("not a conic: quadratic part vanishes")]
    NotAConic,
    #[error("point does not lie on the conic")]
    PointNotOnConic,
    #[error("degenerate line: a = b = 0")]
    DegenerateLine,
    #[error("no rational point found on the conic")]
    NoRationalPoint,
    #[error("operation not supported for a conic of kind {0}")]
    UnsupportedKind(&'static str),
    #[error("every candidate factor was rejected by sampling")]
    AllFactorsRejected,
    #[error("sample parameter {0} is a pole of the parametrization")]
    SampleHitsPole(String),
    #[error("only {0} usable sample parameters, at least 6 required")]
    TooFewSamples(usize),
    #[error("polynomial is not a quartic in x, y")]
    NotQuartic,
    #[error("no lucky evaluation point with |c| <= 50")]
    LuckyPointNotFound,
    #[error("constant input")]
    ConstantInput,
    #[error("polynomial is not square-free")]
    NotSquareFree,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("point is not singular")]
    NotSingular,
    #[error("curve is not a cubic")]
    NotCubic,
    #[error("base point is not a double point")]
    NotDoublePoint,
    #[error("parametrization has a pole at t = {0}")]
    PoleAtT0(String),
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::AllFactorsRejected)
    }
}
