//! Exact plane-curve geometry over ℚ(ζ), ζ a primitive cube root of unity.

pub mod algebra;
pub mod curvelab;
pub mod degeneration;
pub mod error;
pub mod hesse;
pub mod projective;
pub mod suite;

pub use error::{Error, Result};
