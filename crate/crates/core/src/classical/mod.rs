//! Classical abelian invariants: Alexander and Conway polynomials, knot
//! determinant, signature, and Tristram-Levine signatures at the four
//! root-of-unity orders where exact integer arithmetic suffices.
//!
//! Two independent routes to the Alexander polynomial are provided (Fox
//! calculus on a PD code, reduced Burau on a braid word) alongside the
//! Seifert-matrix route; agreement between them is checked in tests.

pub mod burau;
pub mod fox;
pub mod invariants;
pub mod seifert;
pub mod symplectic;

pub use burau::alexander_via_burau;
pub use fox::{alexander_normal_form, alexander_via_fox};
pub use invariants::{
    alexander_from_seifert, conway_from_seifert, determinant_from_seifert,
    signature_from_seifert, tristram_levine_from_seifert, TRISTRAM_LEVINE_ORDERS,
};
pub use seifert::{seifert_genus, seifert_matrix};
pub use symplectic::{standard_symplectic_form, symplectic_normalize, SymplecticNormalization};
