//! Multiresolution collocation solver for the 1-D viscous Burgers equation on
//! semi-orthogonal linear B-spline wavelet bases, with exact Cole–Hopf
//! reference solutions and a benchmark harness.

pub mod approx;
pub mod basis;
pub mod bench;
pub mod error;
pub mod linalg;
pub mod operators;
pub mod oracle;
pub mod quadrature;
pub mod solver;

pub use error::{Error, Result};
