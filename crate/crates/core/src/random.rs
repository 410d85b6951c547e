//! Seeded instance generators. Every generator is a pure function of its
//! seed and caps.
//!
//! Lie algebras are catalog members conjugated by a random invertible
//! integer matrix, so the Jacobi identity holds by construction. Core
//! matrices `∂` have entries uniform in `{−1, 0, 1}`, which makes rank drops
//! common at small sizes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{int, RationalMatrix};
use crate::defdgla::multider::space_dim;
use crate::defdgla::Multiderivation;
use crate::liecore::{catalog, LieAlgebra, Representation};
use crate::twovect::LAVectorSpace;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries uniform in `−bound..=bound`.
pub fn integer_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> RationalMatrix {
    let data = (0..rows * cols).map(|_| int(rng.gen_range(-bound..=bound))).collect();
    RationalMatrix::from_vec(rows, cols, data).expect("length rows·cols")
}

/// Rejection-samples an invertible matrix with entries in `−2..=2`.
pub fn invertible_matrix(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    loop {
        let m = integer_matrix(rng, n, n, 2);
        if m.rank() == n {
            return m;
        }
    }
}

fn catalog_algebras(max_dim: usize) -> Vec<LieAlgebra> {
    let mut out: Vec<LieAlgebra> = [catalog::sl2(), catalog::so3(), catalog::heisenberg3(), catalog::aff1()]
        .into_iter()
        .filter(|l| l.dim() <= max_dim)
        .collect();
    out.extend((1..=max_dim.min(4)).map(catalog::abelian));
    out
}

/// A catalog algebra of dimension at most `max_dim`, in a random basis.
pub fn catalog_lie(rng: &mut impl Rng, max_dim: usize) -> Result<LieAlgebra> {
    let choices = catalog_algebras(max_dim);
    let l = choices
        .choose(rng)
        .ok_or_else(|| Error::Unsupported(format!("no catalog algebra of dimension ≤ {max_dim}")))?;
    let phi = invertible_matrix(rng, l.dim());
    l.transform(&phi)
}

fn catalog_representations(rng: &mut impl Rng, max_n: usize, max_m: usize) -> Vec<Representation> {
    let mut out = Vec::new();
    if max_m >= 2 {
        out.push(catalog::sl2_standard());
        out.push(catalog::heisenberg_plane());
        out.push(Representation::adjoint(&catalog::aff1()));
    }
    if max_m >= 1 {
        out.push(catalog::aff1_line());
    }
    let n = rng.gen_range(1..=max_n.min(3));
    let m = rng.gen_range(1..=max_m.max(1));
    let weights: Vec<Vec<i64>> = (0..n).map(|_| (0..m).map(|_| rng.gen_range(-2..=2)).collect()).collect();
    out.push(catalog::abelian_diagonal(n, &weights).expect("diagonal actions commute"));
    let base = catalog_algebras(max_n);
    let g = base.choose(rng).expect("abelian(1) is always present");
    out.push(Representation::trivial(g, m));
    out.retain(|r| r.algebra().dim() <= max_n && r.dim() <= max_m);
    out
}

/// A catalog representation with `dim 𝔤 ≤ max_n` and `dim C ≤ max_m`,
/// transported along random bases of both.
pub fn catalog_representation(rng: &mut impl Rng, max_n: usize, max_m: usize) -> Result<Representation> {
    if max_n == 0 || max_m == 0 {
        return Err(Error::Unsupported("caps must be positive".into()));
    }
    let choices = catalog_representations(rng, max_n, max_m);
    let r = choices.choose(rng).expect("the diagonal family always fits").clone();
    let phi = invertible_matrix(rng, r.algebra().dim());
    let p = invertible_matrix(rng, r.dim());
    r.transform(&phi, &p)
}

/// `∂ : ℚᵐ → ℚᵖ` with `1 ≤ m ≤ max_core` and `1 ≤ p ≤ max_side`.
pub fn la_vector_space(rng: &mut impl Rng, max_core: usize, max_side: usize) -> Result<LAVectorSpace> {
    if max_core == 0 || max_side == 0 {
        return Err(Error::Unsupported("caps must be positive".into()));
    }
    let m = rng.gen_range(1..=max_core);
    let p = rng.gen_range(1..=max_side);
    Ok(LAVectorSpace::new(integer_matrix(rng, p, m, 1)))
}

/// Arity-`arity` multiderivation on `ℚⁿ` with coefficients in
/// `−bound..=bound`, each nonzero with probability `density`.
pub fn multiderivation(rng: &mut impl Rng, n: usize, arity: usize, bound: i64, density: f64) -> Multiderivation {
    let coeffs = (0..space_dim(n, arity))
        .map(|_| {
            if rng.gen_bool(density) {
                int(rng.gen_range(-bound..=bound))
            } else {
                int(0)
            }
        })
        .collect();
    Multiderivation::from_coeffs(n, arity, coeffs).expect("sized by space_dim")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = la_vector_space(&mut rng(1), 3, 3).unwrap();
        let b = la_vector_space(&mut rng(1), 3, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn lie_instances_are_lie() {
        for seed in 0..20 {
            let l = catalog_lie(&mut rng(seed), 3).unwrap();
            assert!(l.is_lie());
            assert!(l.dim() <= 3);
        }
    }

    #[test]
    fn representations_respect_caps() {
        for seed in 0..20 {
            let r = catalog_representation(&mut rng(seed), 3, 2).unwrap();
            assert!(r.algebra().dim() <= 3 && r.dim() <= 2);
        }
    }

    #[test]
    fn invertible() {
        let mut g = rng(9);
        for n in 0..4 {
            assert_eq!(invertible_matrix(&mut g, n).rank(), n);
        }
    }
}
