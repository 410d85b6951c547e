//! LA-vector spaces and 2-vector spaces: the three-term complex, the groupoid
//! deformation complex, its normalized subcomplex and the van Est map.

pub mod groupoid;
pub mod lav;
pub mod vanest;

pub use groupoid::{
    full_complex, groupoid_differential, groupoid_differential_matrix, normalized_subcomplex,
    normalized_term_basis, quasi_iso_check, reduced_dim, reduced_inclusion, term_dim, GroupoidCochain,
    NormalizedSubcomplex, QuasiIsoReport,
};
pub use lav::{closed_form_dims, delta0, delta1, three_term_complex, LAVectorSpace};
pub use vanest::{expected_sign_table, van_est_matrix, van_est_reduced, van_est_report, ReducedCochain, VanEstReport};
