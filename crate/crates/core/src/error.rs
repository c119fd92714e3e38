use thiserror::Error;

/// Every failure the algebra and solver layers can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,
    #[error("roots of the zero polynomial are undefined")]
    UndefinedRoots,
    #[error("cannot factor the zero polynomial")]
    CannotFactorZero,
    #[error("modulus must be monic and irreducible: {0}")]
    BadModulus(String),

    #[error("rational form numerator shares a factor with 1+x^2")]
    NotReduced,
    #[error("numerator degree {degree} exceeds 2*{nu}")]
    NotATrigPoly { degree: usize, nu: usize },

    #[error("quadratic coefficient is identically zero (linear equation)")]
    LinearEquation,
    #[error("leading coefficient a is identically zero")]
    DegenerateEquation,
    #[error("{0} is not a solution of the equation")]
    NotASolution(String),
    #[error("seed solutions must be nonzero and distinct")]
    DegenerateSeedPair,
    #[error("cross ratio needs four pairwise distinct functions")]
    DegenerateQuadruple,
    #[error("cross ratio is not constant; inputs do not solve a common equation")]
    NotSolutionsOfSameEquation,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("solution count {found} exceeds the bound {bound}")]
    BoundViolation { found: usize, bound: usize },
    #[error("sampling grid needs at least two points, got {0}")]
    BadGrid(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
