//! Exact rational scalars and univariate polynomials: the algebraic
//! substrate for the solvers.

mod factor;
mod modp;
mod mpoly;
mod poly;
mod rational;
mod residue;

pub use factor::{
    factor_irreducible, is_irreducible, rational_roots, rational_roots_with_multiplicity,
    squarefree_decomposition, Factorization,
};
pub use mpoly::MPoly;
pub use poly::Poly;
pub use rational::{format_rational, frac, parse_rational, rat, rational_sqrt, to_f64, Rational};
pub use residue::{residue_solve_scalar, ResidueElem};

pub(crate) use residue::residue_solve_unchecked;
