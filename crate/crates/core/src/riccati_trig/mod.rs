//! Trigonometric-polynomial solutions of `A(t) Y' = B0 + B1 Y + B2 Y^2`.

mod equation;
mod extremal;
mod search;
mod solve;

pub use equation::{
    reduce_trig, transport_to_x, trig_count_bound, trig_degree_bound, verify_trig_solution, TrigRiccatiEq,
};
pub use extremal::gen_extremal_trig;
pub use search::{trig_base_solutions, trig_method_a, trig_sweep_solutions, TrigSearchOutcome};
pub use solve::{solve_all_trig, trig_closure, trig_cross_ratio, TrigSolution, TrigSolutionSet};
