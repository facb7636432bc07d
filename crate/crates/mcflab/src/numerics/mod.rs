//! Small numerical building blocks shared across the crate.

pub mod jet;
pub mod spline;
pub mod stencil;

pub use jet::Jet;
pub use spline::{Boundary, CubicSpline};
