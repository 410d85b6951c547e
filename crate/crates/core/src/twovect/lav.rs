//! LA-vector spaces `C ⊕ V₀ ⇒ V₀`, determined by a linear map `∂ : C → V₀`,
//! and their three-term deformation complex.

use crate::error::{Error, Result};
use crate::exactla::{FiniteComplex, Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LAVectorSpace {
    partial: RationalMatrix,
}

impl LAVectorSpace {
    /// `partial` is `p × m`: it maps the core `C = ℚᵐ` to `V₀ = ℚᵖ`.
    pub fn new(partial: RationalMatrix) -> Self {
        Self { partial }
    }

    pub fn with_dims(core_dim: usize, side_dim: usize, partial: RationalMatrix) -> Result<Self> {
        if partial.shape() != (side_dim, core_dim) {
            return Err(Error::ShapeMismatch(format!(
                "∂ is {:?}, expected {:?}",
                partial.shape(),
                (side_dim, core_dim)
            )));
        }
        Ok(Self::new(partial))
    }

    pub fn core_dim(&self) -> usize {
        self.partial.cols()
    }

    pub fn side_dim(&self) -> usize {
        self.partial.rows()
    }

    pub fn partial(&self) -> &RationalMatrix {
        &self.partial
    }

    pub fn rank(&self) -> usize {
        self.partial.rank()
    }

    /// `(dim ker ∂, dim coker ∂)`.
    pub fn kernel_cokernel_dims(&self) -> (usize, usize) {
        let r = self.rank();
        (self.core_dim() - r, self.side_dim() - r)
    }

    /// The same map in new bases: `Q⁻¹ ∂ P` for `P ∈ GL(C)`, `Q ∈ GL(V₀)`.
    pub fn transform(&self, p: &RationalMatrix, q: &RationalMatrix) -> Result<Self> {
        Ok(Self::new(q.inverse()?.mul(&self.partial)?.mul(p)?))
    }
}

/// Row-major flattening of a matrix into a cochain vector.
pub(crate) fn flatten(m: &RationalMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

pub(crate) fn unflatten(rows: usize, cols: usize, v: &[Rational]) -> RationalMatrix {
    RationalMatrix::from_vec(rows, cols, v.to_vec()).expect("length checked by caller")
}

/// Matrix of a linear map given as a function on coordinate vectors.
pub(crate) fn matrix_of(
    dim_in: usize,
    dim_out: usize,
    f: impl Fn(&[Rational]) -> Vec<Rational>,
) -> RationalMatrix {
    let cols: Vec<Vec<Rational>> = (0..dim_in)
        .map(|j| {
            let mut e = vec![crate::exactla::rational::zero(); dim_in];
            e[j] = crate::exactla::rational::one();
            let out = f(&e);
            debug_assert_eq!(out.len(), dim_out);
            out
        })
        .collect();
    RationalMatrix::from_columns(dim_out, &cols)
}

/// `δ₀γ = (γ∂, ∂γ)` on `Hom(V₀, C)`; coordinates `γ` row-major.
pub fn delta0(lav: &LAVectorSpace) -> RationalMatrix {
    let (m, p) = (lav.core_dim(), lav.side_dim());
    let d = lav.partial();
    matrix_of(m * p, m * m + p * p, |v| {
        let g = unflatten(m, p, v);
        let mut out = flatten(&g.dot(d));
        out.extend(flatten(&d.dot(&g)));
        out
    })
}

/// `δ₁(γ₁, γ₂) = ∂γ₁ − γ₂∂` on `End C ⊕ End V₀`; output in `Hom(C, V₀)`.
pub fn delta1(lav: &LAVectorSpace) -> RationalMatrix {
    let (m, p) = (lav.core_dim(), lav.side_dim());
    let d = lav.partial();
    matrix_of(m * m + p * p, p * m, |v| {
        let g1 = unflatten(m, m, &v[..m * m]);
        let g2 = unflatten(p, p, &v[m * m..]);
        flatten(&d.dot(&g1).sub(&g2.dot(d)).expect("p × m"))
    })
}

/// `0 → Hom(V₀,C) → End C ⊕ End V₀ → Hom(C,V₀) → 0` in degrees `−1..1`.
pub fn three_term_complex(lav: &LAVectorSpace) -> FiniteComplex {
    let (m, p) = (lav.core_dim(), lav.side_dim());
    FiniteComplex::new(
        -1,
        vec![m * p, m * m + p * p, p * m],
        vec![delta0(lav), delta1(lav)],
    )
    .expect("δ₁δ₀ = ∂γ∂ − ∂γ∂ = 0")
}

/// `(dim Hom(coker, ker), dim End coker + dim End ker, dim Hom(ker, coker))`,
/// from the rank of `∂` alone.
pub fn closed_form_dims(lav: &LAVectorSpace) -> [usize; 3] {
    let (k, q) = lav.kernel_cokernel_dims();
    [q * k, q * q + k * k, k * q]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(d: RationalMatrix) -> Vec<usize> {
        three_term_complex(&LAVectorSpace::new(d)).cohomology_dims()
    }

    #[test]
    fn zero_map() {
        assert_eq!(dims(RationalMatrix::zeros(3, 2)), vec![6, 13, 6]);
    }

    #[test]
    fn invertible_map() {
        assert_eq!(dims(RationalMatrix::from_i64(&[&[1, 2], &[3, 4]])), vec![0, 0, 0]);
    }

    #[test]
    fn injective_or_surjective_is_rigid() {
        assert_eq!(dims(RationalMatrix::from_i64(&[&[1], &[1]]))[2], 0);
        assert_eq!(dims(RationalMatrix::from_i64(&[&[1, 0, 2]]))[2], 0);
    }

    #[test]
    fn diag_one_zero() {
        let lav = LAVectorSpace::new(RationalMatrix::from_i64(&[&[1, 0], &[0, 0]]));
        assert_eq!(three_term_complex(&lav).cohomology_dims(), vec![1, 2, 1]);
        assert_eq!(closed_form_dims(&lav), [1, 2, 1]);
    }

    #[test]
    fn shape_is_checked() {
        assert!(LAVectorSpace::with_dims(2, 3, RationalMatrix::zeros(2, 3)).is_err());
    }
}
