//! Polynomial solutions of `a(x) y' = b0 + b1 y + b2 y^2`.

mod equation;
mod extremal;
mod search;
mod solve;
pub(crate) mod system;

pub use equation::{degree_bound, reduce_equation, verify_solution, RiccatiEq};
pub use extremal::gen_extremal;
pub use search::{base_solutions, method_a, sweep_solutions, SearchOutcome};
pub use solve::{closure_solutions, cross_ratio, poly_count_bound, solve_all, Provenance, Solution, SolutionSet};
