//! Exact computation of pedal curves of conics.
//!
//! Polynomials live in [`Poly`] (sparse, rational coefficients). The pipeline
//! builds a rational parametrization of the conic, forms the pedal foot,
//! eliminates the parameter with a resultant, factors the eliminant and
//! classifies the singular points of the result.

pub mod conic;
pub mod elim;
pub mod error;
pub mod factor;
pub mod numeric;
pub mod pedal;
pub mod poly;
pub mod singular;
pub mod text;
pub mod upoly;

pub use error::{Error, Result};
pub use numeric::{Int, Rat};
pub use poly::{MPoly, RationalFunction, Var, VarRegistry};
pub use upoly::UPoly;

/// Polynomial with exact rational coefficients.
pub type Poly = MPoly<Rat>;
/// Polynomial with integer coefficients.
pub type IntPoly = MPoly<Int>;
/// Floating-point evaluation form, used for plotting.
pub type FloatPoly = MPoly<f64>;
pub use conic::Point2;
