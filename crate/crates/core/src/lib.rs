//! Exact deformation complexes of Lie algebras, Lie algebra representations,
//! LA-vector spaces and 2-vector spaces.

pub mod error;
pub mod exactla;
pub mod defdgla;
pub mod instance;
pub mod liecore;
pub mod random;
pub mod twovect;
pub mod vbalg;

pub use error::{Error, Result};

/// The guide's code blocks, compiled and run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-linear-algebra.md")]
    mod exact_linear_algebra {}
    #[doc = include_str!("../../../book/src/lie-algebras.md")]
    mod lie_algebras {}
    #[doc = include_str!("../../../book/src/deformations.md")]
    mod deformations {}
    #[doc = include_str!("../../../book/src/vb-algebras.md")]
    mod vb_algebras {}
    #[doc = include_str!("../../../book/src/two-vector-spaces.md")]
    mod two_vector_spaces {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/conventions.md")]
    mod conventions {}
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
