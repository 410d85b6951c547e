//! The deformation DGLA of a Lie algebra: multiderivations, the
//! Gerstenhaber bracket, `δ = ⟦b, −⟧`, Maurer–Cartan elements, pullbacks,
//! obstructions and gauge flows.

pub mod bracket;
pub mod complex;
pub mod gauge;
pub mod mc;
pub mod multider;

pub use bracket::{gerstenhaber_bracket, gerstenhaber_product};
pub use complex::{def_cohomology, DeformationComplex};
pub use gauge::{conjugation_oracle, gauge_flow, GaugeFlow};
pub use mc::{is_maurer_cartan, maurer_cartan_residual, obstruction_class, pullback, ObstructionClass};
pub use multider::Multiderivation;
