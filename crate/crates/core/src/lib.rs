//! Exact arithmetic for two-dimensional algebraic subshifts over prime fields.

pub mod algebra;
pub mod complexity;
pub mod config;
pub mod elimination;
pub mod error;
pub mod fp;
pub mod linalg;
pub mod linefactors;
pub mod newton;
pub mod pipeline;
pub mod ring;

/// A cell of `Z^2`, or an exponent pair `(i, j)` standing for `X^i Y^j`.
pub type Point = (i64, i64);

pub use algebra::{LaurentPoly, Monomial, Unimodular, Var};
pub use error::{Error, Result};
pub use ring::Ring;
