//! The linear deformation complex of the 2-vector space `V₁ = C ⋉ V₀ ⇉ V₀`,
//! with `c·v = ∂c + v`.
//!
//! A `k`-cochain (`k ≥ 0`) is a pair of linear maps
//! `γ₁ : C^{k+1} ⊕ V₀ → C` and `γ₂ : Cᵏ ⊕ V₀ → V₀`, stored as block rows
//! `γ₁ = [A₀ | … | A_k | E]` and `γ₂ = [B₁ | … | B_k | F]`. A `(−1)`-cochain is
//! a single `γ : V₀ → C`, stored in `γ₁` with an empty `γ₂`.
//!
//! The codomain of `γ₂` is `V₀`: it is the base component of the tangent
//! vector `(c₀, (c₁+…+c_k)·v, γ₁, γ₂) ∈ T V₁ = C ⊕ V₀ ⊕ C ⊕ V₀`.

use serde::Serialize;

use super::lav::{delta0, delta1, flatten, matrix_of, unflatten, LAVectorSpace};
use crate::error::{Error, Result};
use crate::exactla::{sign, ComplexMap, FiniteComplex, Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidCochain {
    pub arity: i64,
    pub gamma1: RationalMatrix,
    pub gamma2: RationalMatrix,
}

/// Column counts of `(γ₁, γ₂)` for a `k`-cochain.
fn block_cols(m: usize, p: usize, k: i64) -> (usize, usize) {
    if k < 0 {
        (p, 0)
    } else {
        let k = k as usize;
        ((k + 1) * m + p, k * m + p)
    }
}

/// `dim C^k_lin(V₁)`: `mp` in degree −1, `(k+1)m² + mp + k·pm + p²` above.
pub fn term_dim(lav: &LAVectorSpace, k: i64) -> usize {
    let (m, p) = (lav.core_dim(), lav.side_dim());
    let (c1, c2) = block_cols(m, p, k);
    m * c1 + p * c2
}

impl GroupoidCochain {
    pub fn zero(lav: &LAVectorSpace, arity: i64) -> Self {
        let (m, p) = (lav.core_dim(), lav.side_dim());
        let (c1, c2) = block_cols(m, p, arity);
        Self {
            arity,
            gamma1: RationalMatrix::zeros(m, c1),
            gamma2: RationalMatrix::zeros(p, c2),
        }
    }

    pub fn new(lav: &LAVectorSpace, arity: i64, gamma1: RationalMatrix, gamma2: RationalMatrix) -> Result<Self> {
        if arity < -1 {
            return Err(Error::DegreeOutOfRange {
                degree: arity,
                min: -1,
                max: i64::MAX,
            });
        }
        let z = Self::zero(lav, arity);
        if gamma1.shape() != z.gamma1.shape() || gamma2.shape() != z.gamma2.shape() {
            return Err(Error::ShapeMismatch(format!(
                "a {arity}-cochain has blocks {:?} and {:?}, got {:?} and {:?}",
                z.gamma1.shape(),
                z.gamma2.shape(),
                gamma1.shape(),
                gamma2.shape()
            )));
        }
        Ok(Self { arity, gamma1, gamma2 })
    }

    /// `γ₁` entries row-major, then `γ₂` entries row-major.
    pub fn to_vector(&self) -> Vec<Rational> {
        let mut v = flatten(&self.gamma1);
        v.extend(flatten(&self.gamma2));
        v
    }

    pub fn from_vector(lav: &LAVectorSpace, arity: i64, v: &[Rational]) -> Result<Self> {
        let z = Self::zero(lav, arity);
        let (r1, c1) = z.gamma1.shape();
        let (r2, c2) = z.gamma2.shape();
        if v.len() != r1 * c1 + r2 * c2 {
            return Err(Error::ShapeMismatch(format!(
                "a {arity}-cochain has {} coordinates, got {}",
                r1 * c1 + r2 * c2,
                v.len()
            )));
        }
        Ok(Self {
            arity,
            gamma1: unflatten(r1, c1, &v[..r1 * c1]),
            gamma2: unflatten(r2, c2, &v[r1 * c1..]),
        })
    }
}

/// Linear maps between argument spaces `Cʲ ⊕ V₀`, the face maps of the nerve.
struct Args<'a> {
    m: usize,
    p: usize,
    partial: &'a RationalMatrix,
}

impl Args<'_> {
    fn dim(&self, j: usize) -> usize {
        j * self.m + self.p
    }

    fn split(&self, j: usize, x: &[Rational]) -> (Vec<Vec<Rational>>, Vec<Rational>) {
        let cs = (0..j).map(|i| x[i * self.m..(i + 1) * self.m].to_vec()).collect();
        (cs, x[j * self.m..].to_vec())
    }

    fn join(cs: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
        let mut out: Vec<Rational> = cs.concat();
        out.extend_from_slice(v);
        out
    }

    /// `(c₀,…,c_{j−1}, v) ↦ (…, c_i + c_{i+1}, …, v)`.
    fn merge(&self, j: usize, i: usize) -> RationalMatrix {
        matrix_of(self.dim(j), self.dim(j - 1), |x| {
            let (mut cs, v) = self.split(j, x);
            let right = cs.remove(i + 1);
            for (a, b) in cs[i].iter_mut().zip(right) {
                *a += b;
            }
            Self::join(&cs, &v)
        })
    }

    /// `(c₀,…,c_{j−1}, v) ↦ (c₀,…,c_{j−2}, c_{j−1}·v)`.
    fn last(&self, j: usize) -> RationalMatrix {
        matrix_of(self.dim(j), self.dim(j - 1), |x| {
            let (mut cs, v) = self.split(j, x);
            let c = cs.pop().expect("j ≥ 1");
            let moved: Vec<Rational> = self.partial.apply(&c).iter().zip(&v).map(|(a, b)| a + b).collect();
            Self::join(&cs, &moved)
        })
    }

    /// `(c₀,…,c_{j−1}, v) ↦ (c₁,…,c_{j−1}, v)`.
    fn drop_first(&self, j: usize) -> RationalMatrix {
        matrix_of(self.dim(j), self.dim(j - 1), |x| {
            let (cs, v) = self.split(j, x);
            Self::join(&cs[1..], &v)
        })
    }

    /// `(c₀,…,c_{j−1}, v) ↦ (c₀, 0, …, 0)` with `j − 1` core slots.
    fn first_only(&self, j: usize) -> RationalMatrix {
        matrix_of(self.dim(j), self.dim(j - 1), |x| {
            let mut out = vec![crate::exactla::rational::zero(); self.dim(j - 1)];
            out[..self.m].clone_from_slice(&x[..self.m]);
            out
        })
    }
}

/// `δ(γ₁, γ₂) = (Γ₁, Γ₂)`.
///
/// In degree −1, `δγ = (γ∂ on c₀, ∂γ on v)`. Above,
/// `Γ₁ = −γ₁(c₀,0,…,0) + Σᵢ (−1)^{i−1} γ₁(…,cᵢ+c_{i+1},…) + (−1)ᵏ γ₁(c₀,…,c_k, c_{k+1}·v)`
/// and
/// `Γ₂ = −(∂γ₁(c₁,…,c_{k+1},v) + γ₂(c₂,…,c_{k+1},v)) + Σᵢ (−1)^{i−1} γ₂(…,cᵢ+c_{i+1},…) + (−1)ᵏ γ₂(c₁,…,c_k, c_{k+1}·v)`.
/// The first term of `Γ₂` is the tangent action `ċ·v̇ = ∂ċ + v̇` of the
/// division map.
pub fn groupoid_differential(lav: &LAVectorSpace, c: &GroupoidCochain) -> Result<GroupoidCochain> {
    let (m, p) = (lav.core_dim(), lav.side_dim());
    let d = lav.partial();
    let expected = GroupoidCochain::zero(lav, c.arity);
    if c.gamma1.shape() != expected.gamma1.shape() || c.gamma2.shape() != expected.gamma2.shape() {
        return Err(Error::ShapeMismatch(format!(
            "cochain blocks {:?}, {:?} do not fit C = ℚ^{m}, V₀ = ℚ^{p}",
            c.gamma1.shape(),
            c.gamma2.shape()
        )));
    }
    if c.arity == -1 {
        let mut g1 = RationalMatrix::zeros(m, m + p);
        g1.set_block(0, 0, &c.gamma1.dot(d));
        return GroupoidCochain::new(lav, 0, g1, d.dot(&c.gamma1));
    }
    let k = c.arity as usize;
    let a = Args { m, p, partial: d };
    let (g1, g2) = (&c.gamma1, &c.gamma2);

    let mut big1 = g1.dot(&a.first_only(k + 2)).neg();
    for i in 1..=k {
        big1 = big1.add(&g1.dot(&a.merge(k + 2, i)).scale(&sign(i as i64 - 1)))?;
    }
    big1 = big1.add(&g1.dot(&a.last(k + 2)).scale(&sign(k as i64)))?;

    let mut big2 = d.dot(g1).add(&g2.dot(&a.drop_first(k + 1)))?.neg();
    for i in 1..=k {
        big2 = big2.add(&g2.dot(&a.merge(k + 1, i - 1)).scale(&sign(i as i64 - 1)))?;
    }
    big2 = big2.add(&g2.dot(&a.last(k + 1)).scale(&sign(k as i64)))?;

    GroupoidCochain::new(lav, c.arity + 1, big1, big2)
}

/// Matrix of `δ` from degree `k` to `k + 1`.
pub fn groupoid_differential_matrix(lav: &LAVectorSpace, k: i64) -> RationalMatrix {
    matrix_of(term_dim(lav, k), term_dim(lav, k + 1), |x| {
        let c = GroupoidCochain::from_vector(lav, k, x).expect("coordinate count");
        groupoid_differential(lav, &c).expect("shapes fixed by degree").to_vector()
    })
}

/// The full linear deformation complex in degrees `−1..=max_degree`.
pub fn full_complex(lav: &LAVectorSpace, max_degree: i64) -> Result<FiniteComplex> {
    if max_degree < -1 {
        return Err(Error::DegreeOutOfRange {
            degree: max_degree,
            min: -1,
            max: i64::MAX,
        });
    }
    let dims = (-1..=max_degree).map(|k| term_dim(lav, k)).collect();
    let diffs = (-1..max_degree).map(|k| groupoid_differential_matrix(lav, k)).collect();
    FiniteComplex::new(-1, dims, diffs)
}

/// Columns spanning the normalized `k`-cochains: `γ₁` vanishes whenever one
/// of `c₀,…,c_k` is zero and `γ₂` whenever one of `c₁,…,c_k` is zero.
/// Computed as a kernel, so the vanishing above degree 1 is an output.
pub fn normalized_term_basis(lav: &LAVectorSpace, k: i64) -> RationalMatrix {
    let dim = term_dim(lav, k);
    if k < 0 {
        return RationalMatrix::identity(dim);
    }
    let (m, p) = (lav.core_dim(), lav.side_dim());
    let ku = k as usize;
    // Restriction to the slice where core slot `i` of `j` is zero.
    let slot_zero = |j: usize, i: usize| {
        let n = j * m + p;
        matrix_of(n, n, |x| {
            let mut y = x.to_vec();
            for t in i * m..(i + 1) * m {
                y[t] = crate::exactla::rational::zero();
            }
            y
        })
    };
    let mut stacked = RationalMatrix::zeros(0, dim);
    for i in 0..=ku {
        let z = slot_zero(ku + 1, i);
        let block = matrix_of(dim, m * ((ku + 1) * m + p), |x| {
            let c = GroupoidCochain::from_vector(lav, k, x).expect("coordinate count");
            flatten(&c.gamma1.dot(&z))
        });
        stacked = stacked.vstack(&block).expect("same column count");
    }
    for i in 0..ku {
        let z = slot_zero(ku, i);
        let block = matrix_of(dim, p * (ku * m + p), |x| {
            let c = GroupoidCochain::from_vector(lav, k, x).expect("coordinate count");
            flatten(&c.gamma2.dot(&z))
        });
        stacked = stacked.vstack(&block).expect("same column count");
    }
    stacked.kernel_basis()
}

/// The reduced coordinates of the normalized complex: `Hom(V₀,C)`,
/// `End C ⊕ End V₀` as `(A₀, F)`, `Hom(C,V₀)` as `B₁`.
pub fn reduced_dim(lav: &LAVectorSpace, k: i64) -> usize {
    let (m, p) = (lav.core_dim(), lav.side_dim());
    match k {
        -1 => m * p,
        0 => m * m + p * p,
        1 => p * m,
        _ => 0,
    }
}

/// Embedding of reduced coordinates into full cochain coordinates.
pub fn reduced_inclusion(lav: &LAVectorSpace, k: i64) -> RationalMatrix {
    let (m, p) = (lav.core_dim(), lav.side_dim());
    matrix_of(reduced_dim(lav, k), term_dim(lav, k), |x| {
        let mut c = GroupoidCochain::zero(lav, k);
        match k {
            -1 => c.gamma1 = unflatten(m, p, x),
            0 => {
                c.gamma1.set_block(0, 0, &unflatten(m, m, &x[..m * m]));
                c.gamma2 = unflatten(p, p, &x[m * m..]);
            }
            1 => c.gamma2.set_block(0, 0, &unflatten(p, m, x)),
            _ => {}
        }
        c.to_vector()
    })
}

#[derive(Clone, Debug)]
pub struct NormalizedSubcomplex {
    /// Degrees `−1..1` in reduced coordinates.
    pub complex: FiniteComplex,
    /// Into [`full_complex`] through degree 2.
    pub inclusion: ComplexMap,
    /// Sign `s` with `d_norm = s · δ` against the three-term complex, per
    /// differential; `None` when both vanish.
    pub sign_flags: Vec<Option<i64>>,
}

fn sign_between(ours: &RationalMatrix, theirs: &RationalMatrix) -> Result<Option<i64>> {
    if ours.is_zero() && theirs.is_zero() {
        Ok(None)
    } else if ours == theirs {
        Ok(Some(1))
    } else if *ours == theirs.neg() {
        Ok(Some(-1))
    } else {
        Err(Error::Validation(
            "normalized differential differs from the three-term one by more than a sign".into(),
        ))
    }
}

pub fn normalized_subcomplex(lav: &LAVectorSpace) -> Result<NormalizedSubcomplex> {
    let full = full_complex(lav, 2)?;
    let incl: Vec<RationalMatrix> = (-1..=1).map(|k| reduced_inclusion(lav, k)).collect();
    for (i, k) in (-1..=2).enumerate() {
        let kernel = normalized_term_basis(lav, k);
        let span = incl.get(i).map_or(0, RationalMatrix::cols);
        if kernel.cols() != span || (span > 0 && incl[i].hstack(&kernel)?.rank() != span) {
            return Err(Error::Validation(format!(
                "reduced coordinates do not span the normalized cochains in degree {k}"
            )));
        }
    }
    let mut diffs = Vec::new();
    for (i, k) in (-1..1).enumerate() {
        let image = full.differential(k).dot(&incl[i]);
        let cols = image
            .columns()
            .iter()
            .map(|col| {
                incl[i + 1].solve(col).ok_or_else(|| {
                    Error::Validation(format!("δ leaves the normalized cochains in degree {}", k + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        diffs.push(RationalMatrix::from_columns(reduced_dim(lav, k + 1), &cols));
    }
    let sign_flags = vec![sign_between(&diffs[0], &delta0(lav))?, sign_between(&diffs[1], &delta1(lav))?];
    let complex = FiniteComplex::new(-1, (-1..=1).map(|k| reduced_dim(lav, k)).collect(), diffs)?;
    let inclusion = ComplexMap::new(complex.clone(), full, incl)?;
    Ok(NormalizedSubcomplex {
        complex,
        inclusion,
        sign_flags,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiIsoReport {
    pub degrees: Vec<i64>,
    pub full_dims: Vec<usize>,
    pub normalized_dims: Vec<usize>,
    /// Rank of the induced map on cohomology.
    pub induced_ranks: Vec<usize>,
    pub passed: bool,
}

/// Whether the normalized inclusion is an isomorphism on `H⁻¹, H⁰, H¹`.
pub fn quasi_iso_check(lav: &LAVectorSpace) -> Result<QuasiIsoReport> {
    let ns = normalized_subcomplex(lav)?;
    let degrees: Vec<i64> = (-1..=1).collect();
    let mut r = QuasiIsoReport {
        degrees: degrees.clone(),
        full_dims: Vec::new(),
        normalized_dims: Vec::new(),
        induced_ranks: Vec::new(),
        passed: true,
    };
    for &k in &degrees {
        let f = ns.inclusion.target().cohomology_dim(k)?;
        let n = ns.complex.cohomology_dim(k)?;
        let rank = ns.inclusion.induced_on_cohomology(k)?.rank();
        r.passed &= f == n && rank == n;
        r.full_dims.push(f);
        r.normalized_dims.push(n);
        r.induced_ranks.push(rank);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn lav(rows: &[&[i64]]) -> LAVectorSpace {
        LAVectorSpace::new(RationalMatrix::from_i64(rows))
    }

    #[test]
    fn term_dims_for_lines() {
        let l = lav(&[&[0]]);
        let cx = full_complex(&l, 2).unwrap();
        assert_eq!(cx.term_dims(), &[1, 3, 5, 7]);
    }

    #[test]
    fn zero_partial_in_degree_minus_one() {
        let l = LAVectorSpace::new(RationalMatrix::zeros(2, 3));
        assert!(groupoid_differential_matrix(&l, -1).is_zero());
    }

    #[test]
    fn square_zero() {
        let l = lav(&[&[1, 2, 0], &[0, 1, -1]]);
        // FiniteComplex::new rejects d² ≠ 0.
        full_complex(&l, 3).unwrap();
    }

    #[test]
    fn differential_in_degree_zero() {
        let l = lav(&[&[2]]);
        // γ₁(c₀, v) = 3c₀ + 5v, γ₂(v) = 7v.
        let c = GroupoidCochain::new(
            &l,
            0,
            RationalMatrix::from_i64(&[&[3, 5]]),
            RationalMatrix::from_i64(&[&[7]]),
        )
        .unwrap();
        let dc = groupoid_differential(&l, &c).unwrap();
        // Γ₁(c₀,c₁,v) = E(∂c₁ + v), Γ₂(c₁, v) = (F∂ − ∂A₀)c₁ − ∂E v.
        assert_eq!(dc.gamma1, RationalMatrix::from_i64(&[&[0, 10, 5]]));
        assert_eq!(dc.gamma2, RationalMatrix::from_i64(&[&[14 - 6, -10]]));
    }

    #[test]
    fn normalized_terms_vanish_above_one() {
        for (m, p) in [(1, 1), (2, 1), (1, 3), (2, 2)] {
            let l = LAVectorSpace::new(RationalMatrix::zeros(p, m));
            assert_eq!(normalized_term_basis(&l, 2).cols(), 0);
            assert_eq!(normalized_term_basis(&l, 3).cols(), 0);
            assert_eq!(normalized_term_basis(&l, 0).cols(), m * m + p * p);
        }
    }

    #[test]
    fn normalized_matches_three_term() {
        let l = lav(&[&[1, 0], &[2, 0], &[0, 0]]);
        let ns = normalized_subcomplex(&l).unwrap();
        assert_eq!(ns.sign_flags, vec![Some(1), Some(-1)]);
        assert_eq!(ns.complex.cohomology_dims(), super::super::lav::three_term_complex(&l).cohomology_dims());
    }

    #[test]
    fn quasi_iso_small_cases() {
        let r = quasi_iso_check(&lav(&[&[0]])).unwrap();
        assert!(r.passed);
        assert_eq!(r.full_dims, vec![1, 2, 1]);
        let r = quasi_iso_check(&lav(&[&[1, 1], &[0, 1]])).unwrap();
        assert!(r.passed);
        assert_eq!(r.full_dims, vec![0, 0, 0]);
    }

    #[test]
    fn vector_round_trip() {
        let l = lav(&[&[1, 2]]);
        let v: Vec<Rational> = (0..term_dim(&l, 1)).map(|i| int(i as i64)).collect();
        let c = GroupoidCochain::from_vector(&l, 1, &v).unwrap();
        assert_eq!(c.to_vector(), v);
    }
}
