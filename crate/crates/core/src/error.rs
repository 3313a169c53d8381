use thiserror::Error;

/// Errors raised by the library. Parse failures and math-domain failures are
/// kept apart so the command line front end can map them to exit codes.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("square ({row},{col}) lies outside the diagram")]
    SquareOutside { row: usize, col: usize },

    #[error("half-integer must have an odd numerator over 2, got {0}/2")]
    NotHalfInteger(i64),

    #[error("Maya set has nonzero charge {0}")]
    NonzeroCharge(i64),

    #[error("parameter must be positive: {0}")]
    NonPositive(&'static str),

    #[error("Pochhammer normalisation (zz')_{n} vanishes")]
    PochhammerZero { n: usize },

    #[error("hypergeometric series does not converge: {0}")]
    NonConvergent(String),

    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),

    #[error("|alpha*beta| = {0} must be < 1")]
    AlphaBetaTooLarge(f64),

    #[error("xi = {0} must lie in [0, 1)")]
    XiOutOfRange(f64),

    #[error("exact arithmetic unavailable: {0}")]
    NotExact(String),

    #[error("parameters ({0}) are outside the principal and complementary series")]
    NotPositiveSeries(String),

    #[error("tail bound {bound:e} exceeds the allowed {allowed:e}")]
    TailTooLarge { bound: f64, allowed: f64 },

    #[error("point set has {0} points, at most {1} are supported")]
    TooManyPoints(usize, usize),

    #[error("state {mode} needs modes outside the window [{lo}, {hi}]")]
    WindowTooSmall { mode: String, lo: String, hi: String },

    #[error("singular matrix")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
