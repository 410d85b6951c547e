//! The Chevalley–Eilenberg complex `C(𝔤, E) = Λ𝔤* ⊗ E`.
//!
//! A `k`-cochain is stored by its values on sorted basis tuples: coordinate
//! `t·m + e` is the `e`-th component of `ω(x_{I_t})`, where `I_t` is the
//! `t`-th `k`-tuple in lexicographic order.

use num_traits::Zero;

use super::representation::Representation;
use crate::error::{Error, Result};
use crate::exactla::{int, sign, Cohomology, FiniteComplex, RationalMatrix, WedgeBasis};

pub fn cochain_dim(n: usize, m: usize, k: usize) -> usize {
    crate::exactla::binomial(n, k) * m
}

/// Matrix of `d_∇ : Cᵏ → Cᵏ⁺¹`,
///
/// `dω(x_0..x_k) = Σ_i (−1)^i ρ(x_i) ω(..x̂_i..)
///               + Σ_{i<j} (−1)^{i+j} ω([x_i,x_j], ..x̂_i..x̂_j..)`.
pub fn ce_differential(rep: &Representation, k: i64) -> Result<RationalMatrix> {
    let g = rep.algebra();
    let n = g.dim();
    let m = rep.dim();
    if k < 0 || k as usize > n {
        return Err(Error::DegreeOutOfRange {
            degree: k,
            min: 0,
            max: n as i64,
        });
    }
    let k = k as usize;
    let source = WedgeBasis::new(n, k)?;
    if k == n {
        return Ok(RationalMatrix::zeros(0, source.len() * m));
    }
    let target = WedgeBasis::new(n, k + 1)?;
    let mut d = RationalMatrix::zeros(target.len() * m, source.len() * m);
    for (row_t, tuple) in target.tuples().iter().enumerate() {
        for i in 0..=k {
            let mut rest = tuple.clone();
            let xi = rest.remove(i);
            let col_t = source.position(&rest).expect("sub-tuple of a sorted tuple is sorted");
            let s = sign(i as i64);
            let rho = rep.action(xi);
            for r in 0..m {
                for e in 0..m {
                    if !rho[(r, e)].is_zero() {
                        d[(row_t * m + r, col_t * m + e)] += &s * &rho[(r, e)];
                    }
                }
            }
        }
        for i in 0..=k {
            for j in i + 1..=k {
                let (a, b) = (tuple[i], tuple[j]);
                let rest: Vec<usize> = tuple
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != i && p != j)
                    .map(|(_, &x)| x)
                    .collect();
                let s = sign((i + j) as i64);
                for l in 0..n {
                    let c = g.c(a, b, l);
                    if c.is_zero() {
                        continue;
                    }
                    let mut args = vec![l];
                    args.extend(&rest);
                    let Some((col_t, perm)) = source.locate(&args) else {
                        continue;
                    };
                    let coef = &s * c * int(perm);
                    for e in 0..m {
                        d[(row_t * m + e, col_t * m + e)] += &coef;
                    }
                }
            }
        }
    }
    Ok(d)
}

/// The whole complex in degrees `0..=dim 𝔤`.
pub fn ce_complex(rep: &Representation) -> FiniteComplex {
    let n = rep.algebra().dim();
    let m = rep.dim();
    let dims = (0..=n).map(|k| cochain_dim(n, m, k)).collect();
    let diffs = (0..n as i64)
        .map(|k| ce_differential(rep, k).expect("degree in range"))
        .collect();
    FiniteComplex::new(0, dims, diffs).expect("d_∇ squares to zero for a flat representation")
}

pub fn ce_cohomology(rep: &Representation, k: i64) -> Result<Cohomology> {
    ce_complex(rep).cohomology(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::binomial;
    use crate::liecore::catalog;

    #[test]
    fn degree_zero_stacks_action() {
        let rep = catalog::sl2_standard();
        let d0 = ce_differential(&rep, 0).unwrap();
        assert_eq!(d0.shape(), (6, 2));
        for a in 0..3 {
            assert_eq!(d0.block(2 * a, 0, 2, 2), rep.action(a).clone());
        }
    }

    #[test]
    fn abelian_trivial_is_zero() {
        let rep = Representation::trivial(&catalog::abelian(3), 1);
        for k in 0..=3 {
            assert!(ce_differential(&rep, k).unwrap().is_zero());
            assert_eq!(ce_cohomology(&rep, k).unwrap().dim(), binomial(3, k as usize));
        }
    }

    #[test]
    fn sl2_adjoint() {
        let rep = Representation::adjoint(&catalog::sl2());
        assert_eq!(ce_differential(&rep, 1).unwrap().rank(), 6);
        for k in 0..=2 {
            assert_eq!(ce_cohomology(&rep, k).unwrap().dim(), 0, "H^{k}");
        }
    }

    #[test]
    fn aff1_adjoint_h0() {
        let rep = Representation::adjoint(&catalog::aff1());
        assert_eq!(ce_cohomology(&rep, 0).unwrap().dim(), 0);
    }

    #[test]
    fn out_of_range() {
        let rep = Representation::adjoint(&catalog::aff1());
        assert!(ce_differential(&rep, 3).is_err());
        assert!(ce_differential(&rep, -1).is_err());
    }
}
