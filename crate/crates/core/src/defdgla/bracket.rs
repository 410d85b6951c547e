//! Gerstenhaber product and bracket.

use num_traits::Zero;

use super::multider::{tuples_for, Multiderivation};
use crate::error::{Error, Result};
use crate::exactla::{int, sign, unshuffles, Rational};

fn check_ambient(c1: &Multiderivation, c2: &Multiderivation) -> Result<()> {
    if c1.ambient() != c2.ambient() {
        return Err(Error::AmbientMismatch {
            left: c1.ambient(),
            right: c2.ambient(),
        });
    }
    Ok(())
}

/// `(c₁∘c₂)(ε_1..ε_{k+l−1}) = Σ_{τ∈S_{l,k−1}} (−1)^τ c₁(c₂(ε_τ(1..l)), ε_τ(l+1..))`
/// for `c₁` of arity `k ≥ 1` and `c₂` of arity `l`.
pub fn gerstenhaber_product(c1: &Multiderivation, c2: &Multiderivation) -> Result<Multiderivation> {
    check_ambient(c1, c2)?;
    let (k, l) = (c1.arity(), c2.arity());
    if k == 0 {
        return Err(Error::ArityMismatch(
            "cannot insert into a multiderivation with no slots".into(),
        ));
    }
    let n = c1.ambient();
    let arity = k + l - 1;
    let mut out = Multiderivation::zero(n, arity);
    let shuffles = unshuffles(l, k - 1);
    for (t, tuple) in tuples_for(n, arity).iter().enumerate() {
        let mut acc = vec![Rational::zero(); n];
        for u in &shuffles {
            let head: Vec<usize> = u.head(l).iter().map(|&p| tuple[p]).collect();
            let inner = c2.eval_basis(&head);
            let mut args = Vec::with_capacity(k);
            args.push(0);
            args.extend(u.tail(l).iter().map(|&p| tuple[p]));
            let s = int(u.sign);
            for (a, w) in inner.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                args[0] = a;
                let v = c1.eval_basis(&args);
                let coef = &s * w;
                for (o, x) in acc.iter_mut().zip(v) {
                    if !x.is_zero() {
                        *o += &coef * x;
                    }
                }
            }
        }
        out.value_at_mut(t).clone_from_slice(&acc);
    }
    Ok(out)
}

/// `⟦c₁, c₂⟧ = (−1)^{(k−1)(l−1)} c₁∘c₂ − c₂∘c₁`.
///
/// A product whose left factor has arity 0 is taken to be zero; for two
/// arity-0 inputs the result is the zero vector.
pub fn gerstenhaber_bracket(c1: &Multiderivation, c2: &Multiderivation) -> Result<Multiderivation> {
    check_ambient(c1, c2)?;
    let (k, l) = (c1.arity(), c2.arity());
    let n = c1.ambient();
    if k == 0 && l == 0 {
        return Ok(Multiderivation::zero(n, 0));
    }
    let arity = k + l - 1;
    let first = if k == 0 {
        Multiderivation::zero(n, arity)
    } else {
        gerstenhaber_product(c1, c2)?.scale(&sign(((k as i64) - 1) * ((l as i64) - 1)))
    };
    let second = if l == 0 {
        Multiderivation::zero(n, arity)
    } else {
        gerstenhaber_product(c2, c1)?
    };
    first.sub(&second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::RationalMatrix;
    use crate::liecore::{catalog, LieAlgebra};

    #[test]
    fn endomorphism_on_vector() {
        let phi = Multiderivation::from_matrix(&RationalMatrix::from_i64(&[&[1, 2], &[3, 4]])).unwrap();
        let v = Multiderivation::from_vector(&[int(1), int(1)]);
        let p = gerstenhaber_product(&phi, &v).unwrap();
        assert_eq!(p.coeffs(), &[int(3), int(7)]);
        // ⟦φ, v⟧ = (−1)^{0·(−1)} φ∘v − 0 = φ(v).
        assert_eq!(gerstenhaber_bracket(&phi, &v).unwrap(), p);
        assert_eq!(gerstenhaber_bracket(&v, &phi).unwrap(), p.scale(&int(-1)));
    }

    #[test]
    fn abelian_square_is_zero() {
        let b = Multiderivation::from_lie(&LieAlgebra::abelian(3));
        assert!(gerstenhaber_product(&b, &b).unwrap().is_zero());
    }

    #[test]
    fn square_of_non_jacobi_bracket() {
        let l = catalog::non_jacobi3();
        let b = Multiderivation::from_lie(&l);
        let bb = gerstenhaber_product(&b, &b).unwrap();
        // Unshuffle sum on (e1,e2,e3): b(b(e1,e2),e3) − b(b(e1,e3),e2) + b(b(e2,e3),e1)
        // = [e1,e3] − 0 + [e2,e1] = −e1, which is the Jacobiator.
        assert_eq!(bb.value_at(0), l.jacobi_defect().at(0, 1, 2));
        assert_eq!(bb.value_at(0), &[int(-1), int(0), int(0)]);
        let sq = gerstenhaber_bracket(&b, &b).unwrap();
        assert_eq!(sq, bb.scale(&int(-2)));
    }

    #[test]
    fn square_of_lie_bracket_vanishes() {
        for l in [catalog::sl2(), catalog::so3(), catalog::heisenberg3(), catalog::aff1()] {
            let b = Multiderivation::from_lie(&l);
            assert!(gerstenhaber_bracket(&b, &b).unwrap().is_zero());
        }
    }

    #[test]
    fn errors() {
        let v = Multiderivation::from_vector(&[int(1)]);
        assert!(matches!(gerstenhaber_product(&v, &v), Err(Error::ArityMismatch(_))));
        let w = Multiderivation::from_vector(&[int(1), int(0)]);
        assert!(matches!(
            gerstenhaber_bracket(&v, &w),
            Err(Error::AmbientMismatch { left: 1, right: 2 })
        ));
        assert!(gerstenhaber_bracket(&v, &v).unwrap().is_zero());
    }
}
