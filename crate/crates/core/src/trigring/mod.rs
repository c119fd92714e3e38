//! Real trigonometric polynomials and their rational images under `x = tan(t/2)`.

mod phi;
mod trigpoly;

pub use phi::{phi_derivative_transport, phi_forward, phi_inverse, phi_inverse_parts, RatForm};
pub use trigpoly::{trig_eval, TrigPoly};
