use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors from evaluation, quadrature and the grid-based solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Gamma function evaluated at (or within machine tolerance of) a pole.
    Pole { re: f64, im: f64 },
    /// Input outside the domain stated by the operation.
    Domain(String),
    /// Adaptive quadrature exhausted its evaluation budget.
    NonConvergence { evaluations: usize },
    /// Semi-infinite integral: tail estimate stayed above the tolerance.
    DecayMismatch { tail: f64, tol: f64 },
    /// Root bracketing precondition f(a)*f(b) < 0 violated.
    NoSignChange,
    /// Series terms failed to decrease within the term budget.
    SeriesDivergence,
    /// Series cancellation exceeded the reliability guard.
    Cancellation,
    /// No evaluation regime covers the requested parameters/argument.
    UnsupportedRegime(String),
    /// Closed-form M-Wright requested outside {1/2, 1/3, 2/3}.
    UnsupportedNu(f64),
    /// Saddle-point expansion requested below its validity threshold.
    OutOfAsymptoticRange { threshold: f64 },
    /// Outside the reliable reach of every configured representation.
    OutOfRange(String),
    /// Grid-based operator requires a uniform grid.
    NonUniformGrid,
    /// Abel solution strategy cannot be applied to the given data.
    StrategyUnsupported(String),
    /// Number of initial values does not match ceil(alpha).
    WrongInitialCount { expected: usize, got: usize },
    /// Zero scan horizon ends before the oscillatory envelope is dominated.
    HorizonTooSmall { horizon: f64, required: f64 },
    /// Stable-density parameters outside |theta| <= min(alpha, 2 - alpha).
    DiamondViolation { alpha: f64, theta: f64 },
    /// The requested object is a singular distribution, not a function.
    SingularCase(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { re, im } => {
                write!(f, "gamma pole at z = {re} + {im}i (non-positive integer)")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NonConvergence { evaluations } => {
                write!(f, "quadrature did not converge within {evaluations} evaluations")
            }
            Error::DecayMismatch { tail, tol } => {
                write!(f, "tail estimate {tail:e} exceeds tolerance {tol:e}")
            }
            Error::NoSignChange => write!(f, "no sign change over the root bracket"),
            Error::SeriesDivergence => write!(f, "series terms did not decrease within budget"),
            Error::Cancellation => write!(f, "series cancellation exceeds reliability guard"),
            Error::UnsupportedRegime(msg) => write!(f, "unsupported regime: {msg}"),
            Error::UnsupportedNu(nu) => {
                write!(f, "no closed form for nu = {nu}; supported: 1/2, 1/3, 2/3")
            }
            Error::OutOfAsymptoticRange { threshold } => {
                write!(f, "below asymptotic validity threshold {threshold}")
            }
            Error::OutOfRange(msg) => write!(f, "outside reliable evaluation range: {msg}"),
            Error::NonUniformGrid => write!(f, "operation requires a uniform grid"),
            Error::StrategyUnsupported(msg) => write!(f, "strategy unsupported: {msg}"),
            Error::WrongInitialCount { expected, got } => {
                write!(f, "expected {expected} initial values, got {got}")
            }
            Error::HorizonTooSmall { horizon, required } => {
                write!(f, "horizon {horizon} below tail-dominance point {required}")
            }
            Error::DiamondViolation { alpha, theta } => {
                write!(f, "(alpha, theta) = ({alpha}, {theta}) outside |theta| <= min(alpha, 2-alpha)")
            }
            Error::SingularCase(tag) => write!(f, "singular distribution: {tag}"),
        }
    }
}

impl std::error::Error for Error {}
