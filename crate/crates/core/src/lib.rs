//! Exact computations with finite-dimensional Jordan superalgebras given by
//! structure constants: superidentity checks, bimodules and extensions, the
//! Clifford–Weyl monomial calculus, second cohomology and splittings of square-zero extensions.

pub mod bimodule;
pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod exactla;
pub mod format;
pub mod superalg;

pub use error::{Error, Result};
