//! Exact rational arithmetic and linear algebra.

mod echelon;
mod mat;
mod rat;
mod sparse;

pub use echelon::{Certificate, Echelon, Insert};
pub use mat::{kernel_basis, rank, rref, solve, DimensionMismatch, RatMat, RatVec, Solution};
pub use rat::{ParseRatError, Rat};
pub use sparse::{axpy, dot_dense, scale, to_dense, to_sparse, Accumulator, SparseVec};
