//! Maurer–Cartan elements, pullbacks and first obstructions.

use serde::Serialize;

use super::bracket::gerstenhaber_bracket;
use super::complex::DeformationComplex;
use super::multider::{space_dim, Multiderivation};
use crate::error::{Error, Result};
use crate::exactla::{frac, FiniteComplex, Rational, RationalMatrix};
use crate::liecore::LieAlgebra;

/// `δc + ½⟦c,c⟧`.
pub fn maurer_cartan_residual(h: &DeformationComplex, c: &Multiderivation) -> Result<Multiderivation> {
    if c.arity() != 2 {
        return Err(Error::ArityMismatch(format!(
            "Maurer–Cartan candidates have arity 2, got {}",
            c.arity()
        )));
    }
    let dc = h.differential(c)?;
    let cc = gerstenhaber_bracket(c, c)?;
    dc.add(&cc.scale(&frac(1, 2)))
}

/// Whether `b + c` is again a Lie bracket, decided by the Maurer–Cartan
/// equation and cross-checked against the Jacobiator of `b + c`.
pub fn is_maurer_cartan(h: &DeformationComplex, c: &Multiderivation) -> Result<bool> {
    let via_equation = maurer_cartan_residual(h, c)?.is_zero();
    let total = h.bracket().add(c)?.to_lie()?;
    let via_jacobi = total.jacobi_defect().is_lie;
    assert_eq!(
        via_equation, via_jacobi,
        "Maurer–Cartan equation and Jacobi identity disagree"
    );
    Ok(via_equation)
}

/// `(φ*c)(x_1..x_k) = φ⁻¹ c(φx_1, …, φx_k)`.
pub fn pullback(phi: &RationalMatrix, c: &Multiderivation) -> Result<Multiderivation> {
    let n = c.ambient();
    if phi.shape() != (n, n) {
        return Err(Error::ShapeMismatch(format!(
            "{:?} automorphism of a {n}-dimensional space",
            phi.shape()
        )));
    }
    let inv = phi.inverse()?;
    let cols = phi.columns();
    let arity = c.arity();
    let mut out = Multiderivation::zero(n, arity);
    for (t, tuple) in super::multider::tuples_for(n, arity).iter().enumerate() {
        let args: Vec<Vec<Rational>> = tuple.iter().map(|&i| cols[i].clone()).collect();
        let v = inv.apply(&c.eval(&args));
        out.value_at_mut(t).clone_from_slice(&v);
    }
    Ok(out)
}

/// Class of `½⟦c,c⟧` in `H²_def`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionClass {
    /// Coordinates against the pinned representatives of `H²_def`.
    pub coordinates: Vec<String>,
    pub is_zero: bool,
    pub h2_dim: usize,
}

pub fn obstruction_class(h: &DeformationComplex, c: &Multiderivation) -> Result<ObstructionClass> {
    if c.arity() != 2 {
        return Err(Error::ArityMismatch(format!(
            "obstructions are defined for arity 2, got {}",
            c.arity()
        )));
    }
    if !h.differential(c)?.is_zero() {
        return Err(Error::NotCocycle);
    }
    let n = h.dim();
    if n < 3 {
        return Ok(ObstructionClass {
            coordinates: Vec::new(),
            is_zero: true,
            h2_dim: 0,
        });
    }
    let half = gerstenhaber_bracket(c, c)?.scale(&frac(1, 2));
    // Degrees 1..=3 suffice for H²; degree 3 is absent when n = 3.
    let top = 3.min(n as i64 - 1);
    let dims: Vec<usize> = (1..=top).map(|k| space_dim(n, (k + 1) as usize)).collect();
    let diffs = (1..top).map(|k| h.matrix(k)).collect::<Result<Vec<_>>>()?;
    let cx = FiniteComplex::new(1, dims, diffs)?;
    let h2 = cx.cohomology(2)?;
    let coords = h2.class_coordinates(half.coeffs())?;
    Ok(ObstructionClass {
        is_zero: coords.iter().all(num_traits::Zero::is_zero),
        coordinates: coords.iter().map(crate::exactla::format_rational).collect(),
        h2_dim: h2.dim(),
    })
}

/// The bracket of `𝔤` pulled back along `φ`, as a Lie algebra.
pub fn pullback_algebra(phi: &RationalMatrix, l: &LieAlgebra) -> Result<LieAlgebra> {
    pullback(phi, &Multiderivation::from_lie(l))?.to_lie()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::liecore::catalog;

    #[test]
    fn zero_is_mc() {
        let h = DeformationComplex::new(&catalog::sl2()).unwrap();
        assert!(is_maurer_cartan(&h, &Multiderivation::zero(3, 2)).unwrap());
    }

    #[test]
    fn lie_brackets_are_mc_over_zero() {
        let h = DeformationComplex::new(&LieAlgebra::abelian(3)).unwrap();
        assert!(is_maurer_cartan(&h, &Multiderivation::from_lie(&catalog::sl2())).unwrap());
        assert!(!is_maurer_cartan(&h, &Multiderivation::from_lie(&catalog::non_jacobi3())).unwrap());
    }

    #[test]
    fn pullback_by_two() {
        let c = Multiderivation::from_lie(&catalog::sl2());
        let p = pullback(&RationalMatrix::scalar(3, int(2)), &c).unwrap();
        // ½ · c(2x, 2y) = 2 c(x, y).
        assert_eq!(p, c.scale(&int(2)));
        assert_eq!(pullback(&RationalMatrix::identity(3), &c).unwrap(), c);
        assert_eq!(
            pullback(&RationalMatrix::zeros(3, 3), &c),
            Err(Error::Singular)
        );
    }

    #[test]
    fn pullback_agrees_with_transform() {
        let l = catalog::sl2();
        let phi = RationalMatrix::from_i64(&[&[1, 2, 0], &[0, 1, 0], &[1, 1, 1]]);
        assert_eq!(pullback_algebra(&phi, &l).unwrap().structure(), l.transform(&phi).unwrap().structure());
    }

    #[test]
    fn obstructions() {
        let h = DeformationComplex::new(&LieAlgebra::abelian(3)).unwrap();
        let zero = obstruction_class(&h, &Multiderivation::zero(3, 2)).unwrap();
        assert!(zero.is_zero);
        let bad = Multiderivation::from_lie(&catalog::non_jacobi3());
        let o = obstruction_class(&h, &bad).unwrap();
        assert_eq!(o.h2_dim, 3);
        assert!(!o.is_zero);

        let h2 = DeformationComplex::new(&LieAlgebra::abelian(2)).unwrap();
        let any = Multiderivation::from_lie(&catalog::aff1());
        assert!(obstruction_class(&h2, &any).unwrap().is_zero);
    }

    #[test]
    fn obstruction_needs_cocycle() {
        let h = DeformationComplex::new(&catalog::sl2()).unwrap();
        let c = Multiderivation::unit(3, 2, 0);
        assert_eq!(obstruction_class(&h, &c), Err(Error::NotCocycle));
    }
}
