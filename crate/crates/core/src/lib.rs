//! Exact-arithmetic evaluation of Schur multiple zeta values and the
//! combinatorial identities attached to them: Jacobi–Trudi, Giambelli and
//! dual Cauchy determinants at finite truncation, constant-entry values as
//! exact rational multiples of powers of π, the quasi-symmetric function
//! algebra with its antipode, and the integral-word duality for ribbons.

pub mod enumerate;
pub mod error;
pub mod identities;
mod matrix;
pub mod qsym;
pub mod scalar;
pub mod shapes;
pub mod specials;
pub mod words;
pub mod zeta;

pub use error::{Error, Result};
pub use scalar::{Exponent, Scalar};
pub use shapes::{Cell, Partition, RibbonSpec, SkewShape, Tableau};
