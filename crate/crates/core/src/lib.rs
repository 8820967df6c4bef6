//! Exact-arithmetic construction of the simple Euclidean Jordan algebras,
//! their conformal (TKK) Lie algebras, explicit Cartan bases, and the
//! enveloping-algebra calculus verifying the quadratic highest-weight
//! relations and the associated constants.
//!
//! All coefficients everywhere are exact elements of the Gaussian-rational
//! field extended by integer square roots; there is no floating point.

pub mod cartan;
pub mod error;
pub mod exactnum;
pub mod jordan;
pub mod linalg;
pub mod report;
pub mod tkk;
pub mod ueval;
pub mod weights;

pub use error::{Error, Result};
pub use exactnum::{Rat, Scalar};
pub use report::Report;
