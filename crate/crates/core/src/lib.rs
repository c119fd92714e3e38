//! Exact enumeration of polynomial solutions of polynomial Riccati equations
//! `a(x) y' = b0 + b1 y + b2 y^2` and of trigonometric-polynomial solutions of
//! their trigonometric counterparts, over rational data.

pub mod error;
pub mod qpoly;
pub mod riccati_poly;
pub mod riccati_trig;
pub mod trigring;

pub use error::{Error, Result};
