//! Lie algebras by structure constants, their representations, semidirect
//! products and Chevalley–Eilenberg cohomology.

pub mod algebra;
pub mod catalog;
pub mod ce;
pub mod representation;

pub use algebra::{JacobiDefect, LieAlgebra};
pub use ce::{ce_cohomology, ce_complex, ce_differential};
pub use representation::{end_representation, semidirect_product, Representation};
