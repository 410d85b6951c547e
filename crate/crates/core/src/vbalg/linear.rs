//! The linear deformation complex of a VB-algebra, the cochain map `Θ`, its
//! mapping cone and the splitting that identifies the two.

use num_traits::Zero;
use serde::Serialize;

use super::vba::VBAlgebra;
use crate::defdgla::multider::{space_dim, tuples_for, Multiderivation};
use crate::defdgla::DeformationComplex;
use crate::error::{Error, Result};
use crate::exactla::{
    binomial, mapping_cone, sign, ComplexMap, FiniteComplex, Rational, RationalMatrix, WedgeBasis,
};
use crate::liecore::{ce_complex, end_representation};

/// Weight-0 part of `C_def(𝔨)` as a complex, with the coordinates of `𝔨`
/// multiderivations that span each term.
#[derive(Clone, Debug)]
pub struct LinearSubcomplex {
    pub complex: FiniteComplex,
    /// `basis[k + 1]` lists, in increasing order, the coordinates of
    /// arity-`(k + 1)` multiderivations on `𝔨` that have weight 0.
    pub basis: Vec<Vec<usize>>,
    pub max_degree: i64,
}

impl LinearSubcomplex {
    pub fn basis_at(&self, k: i64) -> &[usize] {
        &self.basis[(k + 1) as usize]
    }

    /// Expands subcomplex coordinates into a multiderivation on `𝔨`.
    pub fn embed(&self, vba: &VBAlgebra, k: i64, coords: &[Rational]) -> Multiderivation {
        let d = vba.total_dim();
        let arity = (k + 1) as usize;
        let mut full = vec![Rational::zero(); space_dim(d, arity)];
        for (x, &i) in coords.iter().zip(self.basis_at(k)) {
            full[i] = x.clone();
        }
        Multiderivation::from_coeffs(d, arity, full).expect("sized by space_dim")
    }
}

/// Dimension of the weight-0 part in degree `k`:
/// `C(n, k+1)·n + C(n, k)·m²`.
pub fn linear_term_dim(n: usize, m: usize, k: i64) -> usize {
    if k < -1 {
        return 0;
    }
    let a = (k + 1) as usize;
    binomial(n, a) * n + if a >= 1 { binomial(n, a - 1) * m * m } else { 0 }
}

/// The weight-0 subcomplex on `−1..=min(max_degree + 1, dim 𝔨 − 1)`; the
/// extra degree keeps cohomology at `max_degree` honest.
pub fn linear_subcomplex(vba: &VBAlgebra, max_degree: i64) -> Result<LinearSubcomplex> {
    let d = vba.total_dim();
    let top = d as i64 - 1;
    if max_degree < -1 || max_degree > top {
        return Err(Error::DegreeOutOfRange {
            degree: max_degree,
            min: -1,
            max: top,
        });
    }
    let hi = (max_degree + 1).min(top);
    let h = DeformationComplex::new(vba.kk())?;
    let basis: Vec<Vec<usize>> = (-1..=hi)
        .map(|k| {
            vba.coordinate_weights((k + 1) as usize)
                .iter()
                .enumerate()
                .filter(|(_, &w)| w == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut diffs = Vec::new();
    for k in -1..hi {
        let src = &basis[(k + 1) as usize];
        let tgt = &basis[(k + 2) as usize];
        let arity = (k + 1) as usize;
        let weights = vba.coordinate_weights(arity + 1);
        let mut m = RationalMatrix::zeros(tgt.len(), src.len());
        for (j, &i) in src.iter().enumerate() {
            let image = h.differential(&Multiderivation::unit(d, arity, i))?;
            for (p, x) in image.coeffs().iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                // δ preserves weight because b_𝔨 is linear.
                assert_eq!(weights[p], 0, "δ left the weight-0 subspace");
                let row = tgt.binary_search(&p).expect("weight-0 coordinate");
                m[(row, j)] = x.clone();
            }
        }
        diffs.push(m);
    }
    let dims = basis.iter().map(Vec::len).collect();
    Ok(LinearSubcomplex {
        complex: FiniteComplex::new(-1, dims, diffs)?,
        basis,
        max_degree,
    })
}

/// `C_def(𝔤)[−1]`: degree `k` holds arity-`k` multiderivations on `𝔤`,
/// `k = 0..=n`, with differential `−δ`.
pub fn shifted_def_complex(vba: &VBAlgebra) -> Result<FiniteComplex> {
    let h = DeformationComplex::new(vba.g())?;
    Ok(h.complex().shift(-1))
}

/// `C(𝔤, End C)` in degrees `0..=n`.
pub fn end_complex(vba: &VBAlgebra) -> FiniteComplex {
    ce_complex(&end_representation(vba.theta()))
}

/// `Θ(c)(v_1..v_k)(χ) = (−1)^{k−1} θ(c(v_1..v_k)) χ` from
/// `C_def(𝔤)[−1]^k` to `Cᵏ(𝔤, End C)`.
pub fn theta_matrix(vba: &VBAlgebra, k: usize) -> RationalMatrix {
    let n = vba.n();
    let m = vba.m();
    let tuples = binomial(n, k);
    let mut out = RationalMatrix::zeros(tuples * m * m, tuples * n);
    let s = sign(k as i64 - 1);
    for t in 0..tuples {
        for a in 0..n {
            let rho = vba.theta().action(a);
            for r in 0..m {
                for q in 0..m {
                    if !rho[(r, q)].is_zero() {
                        out[(t * m * m + r * m + q, t * n + a)] = &s * &rho[(r, q)];
                    }
                }
            }
        }
    }
    out
}

pub fn theta_cochain_map(vba: &VBAlgebra) -> Result<ComplexMap> {
    let source = shifted_def_complex(vba)?;
    let target = end_complex(vba);
    let comps = (0..=vba.n()).map(|k| theta_matrix(vba, k)).collect();
    ComplexMap::new(source, target, comps)
}

/// `Cone(Θ)` on degrees `−1..=n`, term `k` being `Cᵏ(𝔤, End C) ⊕ Cᵏ_def(𝔤)`.
pub fn cone_complex(vba: &VBAlgebra) -> Result<FiniteComplex> {
    mapping_cone(&theta_cochain_map(vba)?)
}

/// The two restrictions of a weight-0 multiderivation `c` of arity `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    /// `c₁(v_1..v_k)(χ_s)_r`, stored at `t·m² + r·m + s` (coordinates of
    /// `Cᵏ(𝔤, End C)`).
    pub c1: Vec<Rational>,
    /// `c` on `𝔤`-arguments with its `𝔤`-component.
    pub c2: Multiderivation,
}

/// `c ↦ (c₁, c₂)`; errors with `NotLinear` on components of other weights.
pub fn splitting_iso(vba: &VBAlgebra, c: &Multiderivation) -> Result<Split> {
    let present = vba.weights_present(c)?;
    if let Some(&w) = present.iter().find(|&&w| w != 0) {
        return Err(Error::NotLinear { weight: w });
    }
    let n = vba.n();
    let m = vba.m();
    let arity = c.arity();
    let mut c2 = Multiderivation::zero(n, arity);
    for (t, tuple) in tuples_for(n, arity).iter().enumerate() {
        let v = c.eval_basis(tuple);
        c2.value_at_mut(t).clone_from_slice(&v[..n]);
    }
    let mut c1 = Vec::new();
    if arity >= 1 {
        let k = arity - 1;
        c1 = vec![Rational::zero(); binomial(n, k) * m * m];
        for (t, tuple) in tuples_for(n, k).iter().enumerate() {
            for s in 0..m {
                let mut args = tuple.clone();
                args.push(n + s);
                let v = c.eval_basis(&args);
                for r in 0..m {
                    c1[t * m * m + r * m + s] = v[n + r].clone();
                }
            }
        }
    }
    Ok(Split { c1, c2 })
}

/// Inverse of [`splitting_iso`].
pub fn unsplit(vba: &VBAlgebra, split: &Split) -> Result<Multiderivation> {
    let n = vba.n();
    let m = vba.m();
    let d = vba.total_dim();
    let arity = split.c2.arity();
    if split.c2.ambient() != n {
        return Err(Error::AmbientMismatch {
            left: n,
            right: split.c2.ambient(),
        });
    }
    let expected = if arity >= 1 { binomial(n, arity - 1) * m * m } else { 0 };
    if split.c1.len() != expected {
        return Err(Error::ShapeMismatch(format!(
            "c1 has {} coordinates, expected {expected}",
            split.c1.len()
        )));
    }
    let mut c = Multiderivation::zero(d, arity);
    if arity > d {
        return Ok(c);
    }
    let basis = WedgeBasis::new(d, arity)?;
    for (t, tuple) in tuples_for(n, arity).iter().enumerate() {
        let pos = basis.position(tuple).expect("𝔤-tuples are tuples of 𝔨");
        let out = c.value_at_mut(pos);
        out[..n].clone_from_slice(split.c2.value_at(t));
    }
    if arity >= 1 {
        for (t, tuple) in tuples_for(n, arity - 1).iter().enumerate() {
            for s in 0..m {
                let mut args = tuple.clone();
                args.push(n + s);
                let pos = basis.position(&args).expect("sorted");
                let out = c.value_at_mut(pos);
                for r in 0..m {
                    out[n + r] = split.c1[t * m * m + r * m + s].clone();
                }
            }
        }
    }
    Ok(c)
}

/// Matrix of the splitting from linear-subcomplex coordinates in degree `k`
/// to cone coordinates `(c₁, c₂)`.
pub fn splitting_matrix(vba: &VBAlgebra, lin: &LinearSubcomplex, k: i64) -> Result<RationalMatrix> {
    let d = vba.total_dim();
    let arity = (k + 1) as usize;
    let basis = lin.basis_at(k);
    let cols = basis
        .iter()
        .map(|&i| {
            let s = splitting_iso(vba, &Multiderivation::unit(d, arity, i))?;
            let mut col = s.c1;
            col.extend(s.c2.coeffs().iter().cloned());
            Ok(col)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalMatrix::from_columns(basis.len(), &cols))
}

/// Per-degree scalar relating the transported linear differential to the
/// cone differential.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingSigns {
    pub degrees: Vec<i64>,
    /// `Some(±1)` when `S D_lin S⁻¹ = ±D_cone` in that degree.
    pub signs: Vec<Option<i64>>,
}

impl SplittingSigns {
    pub fn all_consistent(&self) -> bool {
        self.signs.iter().all(Option::is_some)
    }
}

pub fn splitting_sign_table(vba: &VBAlgebra, max_degree: i64) -> Result<SplittingSigns> {
    let lin = linear_subcomplex(vba, max_degree)?;
    let cone = cone_complex(vba)?;
    let hi = lin.complex.max_degree();
    let mut degrees = Vec::new();
    let mut signs = Vec::new();
    for k in -1..hi {
        let s_k = splitting_matrix(vba, &lin, k)?;
        let s_next = splitting_matrix(vba, &lin, k + 1)?;
        let transported = s_next.dot(&lin.complex.differential(k)).dot(&s_k.inverse()?);
        let target = cone.differential(k);
        let sign = if transported == target {
            Some(1)
        } else if transported == target.neg() {
            Some(-1)
        } else {
            None
        };
        degrees.push(k);
        signs.push(sign);
    }
    Ok(SplittingSigns { degrees, signs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::liecore::{catalog, LieAlgebra, Representation};

    fn sl2_std() -> VBAlgebra {
        VBAlgebra::new(catalog::sl2_standard())
    }

    #[test]
    fn trivial_abelian_linear_dims() {
        let v = VBAlgebra::new(Representation::trivial(&LieAlgebra::abelian(1), 1));
        let lin = linear_subcomplex(&v, 0).unwrap();
        assert_eq!(lin.complex.dim(0), 2);
        assert!(lin.complex.differential(-1).is_zero());
    }

    #[test]
    fn linear_dims_follow_formula() {
        let v = sl2_std();
        let lin = linear_subcomplex(&v, 3).unwrap();
        for k in -1..=4 {
            assert_eq!(lin.complex.dim(k), linear_term_dim(3, 2, k));
        }
    }

    #[test]
    fn linear_basis_kills_two_core_arguments() {
        let v = sl2_std();
        let lin = linear_subcomplex(&v, 2).unwrap();
        for k in 0..=2 {
            for i in 0..lin.basis_at(k).len() {
                let mut coords = vec![int(0); lin.basis_at(k).len()];
                coords[i] = int(1);
                let c = lin.embed(&v, k, &coords);
                for t in tuples_for(5, (k + 1) as usize) {
                    if t.iter().filter(|&&x| x >= 3).count() >= 2 {
                        assert!(c.eval_basis(&t).iter().all(Zero::is_zero));
                    }
                }
            }
        }
    }

    #[test]
    fn theta_zero_for_trivial_action() {
        let v = VBAlgebra::new(Representation::trivial(&catalog::sl2(), 2));
        let t = theta_cochain_map(&v).unwrap();
        for k in 0..=3 {
            assert!(t.component(k).is_zero());
        }
    }

    #[test]
    fn theta_on_inner_derivation() {
        let v = sl2_std();
        let l = v.g();
        // c = ad_v as an arity-1 cochain, v = e + 2h.
        let vv = vec![int(1), int(0), int(2)];
        let c = Multiderivation::from_matrix(&l.ad_vector(&vv)).unwrap();
        let th = theta_matrix(&v, 1).dot(&RationalMatrix::from_columns(9, &[c.coeffs().to_vec()]));
        for w in 0..3 {
            let mut xw = vec![int(0); 3];
            xw[w] = int(1);
            let expected = v.theta().action_of(&l.bracket(&vv, &xw));
            for r in 0..2 {
                for s in 0..2 {
                    assert_eq!(th[(w * 4 + r * 2 + s, 0)], expected[(r, s)]);
                }
            }
        }
    }

    #[test]
    fn bracket_splits_into_action_and_bracket() {
        let v = sl2_std();
        let b = Multiderivation::from_lie(v.kk());
        let s = splitting_iso(&v, &b).unwrap();
        assert_eq!(s.c2, Multiderivation::from_lie(v.g()));
        for a in 0..3 {
            for r in 0..2 {
                for q in 0..2 {
                    assert_eq!(s.c1[a * 4 + r * 2 + q], v.theta().action(a)[(r, q)]);
                }
            }
        }
        assert_eq!(unsplit(&v, &s).unwrap(), b);
    }

    #[test]
    fn non_linear_input_rejected() {
        let v = sl2_std();
        let c = Multiderivation::unit(5, 1, 3); // x_0 ↦ χ_0: weight −1.
        assert_eq!(splitting_iso(&v, &c), Err(Error::NotLinear { weight: -1 }));
    }

    #[test]
    fn cone_matches_linear() {
        let v = sl2_std();
        let lin = linear_subcomplex(&v, 2).unwrap();
        let cone = cone_complex(&v).unwrap();
        for k in -1..=2 {
            assert_eq!(lin.complex.dim(k), cone.dim(k));
            assert_eq!(lin.complex.cohomology_dim(k).unwrap(), cone.cohomology_dim(k).unwrap());
        }
        let signs = splitting_sign_table(&v, 2).unwrap();
        assert!(signs.signs.iter().all(|s| *s == Some(1)), "{signs:?}");
    }
}
