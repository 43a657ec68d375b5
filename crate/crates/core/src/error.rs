use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised across the crate.
///
/// Variants split into three families that the command-line front end maps
/// onto exit codes: malformed input, math-domain violations and numerical
/// convergence failures.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("polynomial of degree {degree} does not fit the formal degree {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },

    #[error("degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },

    #[error("both integers are zero")]
    BothZero,

    #[error("gcd of the constants is {0}, expected 1")]
    NotCoprime(BigInt),

    #[error("ill-conditioned input: {0}")]
    IllConditioned(String),

    #[error("{0}")]
    Domain(String),

    #[error("the set contains 0")]
    ZeroInSet,

    #[error("resultant vanishes: the homogeneous parts share a factor")]
    ZeroResultant,

    #[error("mapping is not generic: no {0} pairwise non-proportional zeros")]
    NonGeneric(usize),

    #[error("no equalizing probability vector exists for this matrix")]
    NoEqualizingVector,

    #[error("root finder did not converge for degree {degree} after {iterations} iterations")]
    NoConvergence { degree: usize, iterations: usize },

    #[error("bracketing failed: {0}")]
    Bracket(String),

    #[error("polynomial has a repeated zero near {0}")]
    RepeatedZero(String),
}

impl Error {
    /// True for failures of an iterative numerical method.
    pub fn is_convergence(&self) -> bool {
        matches!(self, Error::NoConvergence { .. } | Error::Bracket(_))
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
