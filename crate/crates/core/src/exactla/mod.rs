//! Exact rational linear algebra, wedge-basis combinatorics and bounded
//! cochain complexes.

pub mod complex;
pub mod exactness;
pub mod matrix;
pub mod rational;
pub mod tuples;

pub use complex::{mapping_cone, Cohomology, ComplexMap, FiniteComplex};
pub use exactness::{exactness_check, ExactnessReport, LinearSequence, NodeReport};
pub use matrix::{kernel_basis, rref, RationalMatrix, Rref};
pub use rational::{format_rational, frac, int, parse_rational, sign, Rational};
pub use tuples::{binomial, enumerate_tuples, sort_with_sign, unshuffles, IndexTuple, Unshuffle, WedgeBasis};
