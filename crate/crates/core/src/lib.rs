//! Exact-arithmetic engine for invariant SO(3) structures on
//! 5-dimensional Lie algebras: near-integrability, characteristic torsion
//! and connection, torsion types, curvature, holonomy reduction, and the
//! 8-dimensional SU(3) extension on L x K.
//!
//! All computation is over the field Q(sqrt 3); equality everywhere is
//! bit-exact.

pub mod error;
pub mod scalar;
pub mod linalg;
pub mod poly;
pub mod exterior;
pub mod liealg;
pub mod riemann;
pub mod so3;
pub mod su3;
pub mod report;
pub mod catalog;
pub mod search;

pub use error::{Error, Result};
pub use scalar::{Rational, Scalar};
