//! Z2-graded algebras by structure constants: identity checks, subspaces,
//! quotients, Peirce decomposition and idempotent lifting.

mod algebra;
mod envelope;
mod identities;
mod peirce;
mod subspace;

pub use algebra::{q, AlgebraBuilder, Element, SuperAlgebra};
pub use envelope::{grassmann_envelope, grassmann_envelope_check, grassmann_mul};
pub use identities::{
    check_operator_identity, check_super_jordan, check_super_jordan_square_zero, check_supercommutativity,
    IdentityReport, Witness,
};
pub use peirce::{lift_idempotent, peirce_decomposition, PeirceComponent, PeirceDecomposition};
pub use subspace::{derived_series, is_ideal, is_solvable, quotient, subspace_product, Quotient, Subspace};
