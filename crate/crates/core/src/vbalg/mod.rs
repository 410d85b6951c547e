//! VB-algebras over a point: weight grading on `𝔨 = 𝔤 ⋉ C`, linearization,
//! the linear subcomplex, `Θ` and its cone, the splitting, and the long
//! exact sequence.

pub mod les;
pub mod linear;
pub mod vba;

pub use les::{les_check, LesReport};
pub use linear::{
    cone_complex, end_complex, linear_subcomplex, linear_term_dim, splitting_iso, splitting_matrix,
    splitting_sign_table, theta_cochain_map, unsplit, LinearSubcomplex, Split, SplittingSigns,
};
pub use vba::{VBAlgebra, WeightDecomposition};
