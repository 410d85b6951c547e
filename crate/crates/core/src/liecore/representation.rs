//! Representations of a Lie algebra on `Q^m` given by generator matrices.

use num_traits::Zero;

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{Rational, RationalMatrix};

/// `ρ(x_a)` for each basis element `x_a`. Flatness
/// `ρ([x_i,x_j]) = [ρ(x_i), ρ(x_j)]` is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    dim: usize,
    action: Vec<RationalMatrix>,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, dim: usize, action: Vec<RationalMatrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(a) = action.iter().position(|m| m.shape() != (dim, dim)) {
            return Err(Error::ShapeMismatch(format!(
                "action matrix {a} is {:?}, expected {dim}x{dim}",
                action[a].shape()
            )));
        }
        let rep = Self {
            algebra,
            dim,
            action,
        };
        if let Some((i, j)) = rep.flatness_violation() {
            return Err(Error::NotFlat { i, j });
        }
        Ok(rep)
    }

    pub fn adjoint(algebra: &LieAlgebra) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.ad(i)).collect();
        Self::new(algebra.clone(), algebra.dim(), action).expect("adjoint of a Lie algebra is flat")
    }

    pub fn trivial(algebra: &LieAlgebra, dim: usize) -> Self {
        let action = vec![RationalMatrix::zeros(dim, dim); algebra.dim()];
        Self::new(algebra.clone(), dim, action).expect("zero action is flat")
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, a: usize) -> &RationalMatrix {
        &self.action[a]
    }

    pub fn actions(&self) -> &[RationalMatrix] {
        &self.action
    }

    /// `ρ(x)` for an arbitrary element.
    pub fn action_of(&self, x: &[Rational]) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for (a, xa) in x.iter().enumerate() {
            if !xa.is_zero() {
                m = m.add(&self.action[a].scale(xa)).expect("same shape");
            }
        }
        m
    }

    fn flatness_violation(&self) -> Option<(usize, usize)> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.action_of(&self.algebra.bracket_basis(i, j));
                let rhs = self.action[i]
                    .dot(&self.action[j])
                    .sub(&self.action[j].dot(&self.action[i]))
                    .expect("same shape");
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// The representation transported along `φ` on the algebra (see
    /// [`LieAlgebra::transform`]) and `P` on the module:
    /// `ρ'(x_i) = P ρ(φ x_i) P⁻¹`.
    pub fn transform(&self, phi: &RationalMatrix, p: &RationalMatrix) -> Result<Self> {
        let algebra = self.algebra.transform(phi)?;
        let p_inv = p.inverse()?;
        let action = phi
            .columns()
            .iter()
            .map(|col| p.dot(&self.action_of(col)).dot(&p_inv))
            .collect();
        Self::new(algebra, self.dim, action)
    }
}

/// `End C` with `(x·φ) = ρ(x)φ − φρ(x)`; `φ` is flattened row-major, so
/// `φ_{rs}` sits at `r·m + s`.
pub fn end_representation(rep: &Representation) -> Representation {
    let m = rep.dim();
    let action = rep
        .actions()
        .iter()
        .map(|rho| {
            let mut out = RationalMatrix::zeros(m * m, m * m);
            for r in 0..m {
                for s in 0..m {
                    for t in 0..m {
                        out[(r * m + s, t * m + s)] += &rho[(r, t)];
                        out[(r * m + s, r * m + t)] -= &rho[(t, s)];
                    }
                }
            }
            out
        })
        .collect();
    Representation::new(rep.algebra().clone(), m * m, action).expect("commutator action is flat")
}

/// `𝔤 ⋉ C` on the basis `x_0, …, x_{n-1}, χ_0, …, χ_{m-1}` with
/// `[x_i, χ_s] = ρ(x_i) χ_s`.
pub fn semidirect_product(rep: &Representation) -> LieAlgebra {
    let g = rep.algebra();
    let n = g.dim();
    let m = rep.dim();
    let d = n + m;
    let mut structure = vec![Rational::zero(); d * d * d];
    let idx = |i: usize, j: usize, k: usize| (i * d + j) * d + k;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                structure[idx(i, j, k)] = g.c(i, j, k).clone();
            }
        }
        for s in 0..m {
            for r in 0..m {
                let v = rep.action(i)[(r, s)].clone();
                structure[idx(n + s, i, n + r)] = -v.clone();
                structure[idx(i, n + s, n + r)] = v;
            }
        }
    }
    let kk = LieAlgebra::new(d, structure).expect("semidirect product of a flat action is Lie");
    match g.names() {
        Some(names) => {
            let mut all = names.to_vec();
            all.extend((0..m).map(|s| format!("c{s}")));
            kk.with_names(all)
        }
        None => kk,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::liecore::catalog;

    #[test]
    fn non_flat_rejected() {
        let e = RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        let z = RationalMatrix::zeros(2, 2);
        let err = Representation::new(catalog::sl2(), 2, vec![e, z.clone(), z]);
        assert_eq!(err, Err(Error::NotFlat { i: 0, j: 2 }));
    }

    #[test]
    fn end_of_sl2_standard_has_scalar_invariants() {
        let end = end_representation(&catalog::sl2_standard());
        let mut stacked = RationalMatrix::zeros(0, 4);
        for a in end.actions() {
            stacked = stacked.vstack(a).unwrap();
        }
        let k = stacked.kernel_basis();
        assert_eq!(k.cols(), 1);
        // The identity matrix, flattened.
        assert_eq!(k.column(0), vec![int(1), int(0), int(0), int(1)]);
    }

    #[test]
    fn end_of_line_is_trivial() {
        let end = end_representation(&catalog::aff1_line());
        assert!(end.actions().iter().all(RationalMatrix::is_zero));
    }

    #[test]
    fn semidirect_with_trivial_rep_has_central_core() {
        let kk = semidirect_product(&Representation::trivial(&catalog::sl2(), 2));
        assert!(kk.is_lie());
        for s in 3..5 {
            assert!(kk.ad(s).is_zero());
        }
    }

    #[test]
    fn semidirect_line_on_line_is_aff1() {
        let g = LieAlgebra::abelian(1);
        let rep = Representation::new(g, 1, vec![RationalMatrix::from_i64(&[&[1]])]).unwrap();
        let kk = semidirect_product(&rep);
        assert_eq!(kk.structure(), catalog::aff1().structure());
    }

    #[test]
    fn semidirect_recovers_core_action() {
        let rep = catalog::sl2_standard();
        let kk = semidirect_product(&rep);
        assert!(kk.is_lie());
        for a in 0..3 {
            let ad = kk.ad(a);
            assert_eq!(ad.block(3, 3, 2, 2), rep.action(a).clone());
        }
    }

    #[test]
    fn transform_preserves_flatness() {
        let rep = catalog::sl2_standard();
        let phi = RationalMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]);
        let p = RationalMatrix::from_i64(&[&[1, 3], &[0, 1]]);
        let t = rep.transform(&phi, &p).unwrap();
        assert!(t.algebra().is_lie());
    }
}
