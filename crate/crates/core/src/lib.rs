//! Exact dimensions of invariant subspaces of SU(N) tensor powers.
//!
//! The count of singlets in `V_1 ⊗ ... ⊗ V_n` is the constant term of
//! `D(z) · χ_1(z) ··· χ_n(z)`, where `D` is the expanded Weyl denominator
//! over the positive roots and the `χ_i` are Weyl characters written as
//! Laurent polynomials in the torus variables. Everything here is exact:
//! integer coefficients are arbitrary precision and series work over the
//! rationals.

pub mod characters;
pub mod error;
pub mod holonomic;
pub mod invariant;
pub mod laurent;
pub mod roots;
pub mod verify;

pub use characters::{adjoint_character, character_from_weights, fundamental_character, CharacterSpec};
pub use error::{Error, Result};
pub use invariant::{
    adjoint_dimension_sequence, derangement_sequence, dimension_table, invariant_dimension,
    power_dimension_sequence, su2_cg_oracle, su3_component_sequence,
    su2_dimension_by_binomials, su3_components, su3_dimension_from_components, DimensionRecord, DimensionTable,
    InvariantQuery, SU3Components,
};
pub use laurent::{pow_with_target, ExponentWindow, LaurentPolynomial};
pub use roots::{build_root_system, haar_denominator, RootSystemA, WeightVector};
