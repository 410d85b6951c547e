//! The deformation complex `C_def(𝔤)` with `δ = ⟦b, −⟧`.
//!
//! Degree `k` consists of multiderivations of arity `k + 1`, so the range is
//! `−1..=dim − 1` and the coordinates agree with `Cᵏ⁺¹(𝔤, ad)`.

use num_traits::Zero;

use super::bracket::gerstenhaber_bracket;
use super::multider::{space_dim, tuples_for, Multiderivation};
use crate::error::{Error, Result};
use crate::exactla::{int, sign, Cohomology, FiniteComplex, Rational, RationalMatrix};
use crate::liecore::LieAlgebra;

/// A Lie bracket `b` viewed as the base point of its deformation complex.
#[derive(Clone, Debug)]
pub struct DeformationComplex {
    bracket: Multiderivation,
    max_degree: i64,
}

impl DeformationComplex {
    /// Full degree range `−1..=dim − 1`.
    pub fn new(l: &LieAlgebra) -> Result<Self> {
        l.validate()?;
        let bracket = Multiderivation::from_lie(l);
        let max_degree = l.dim() as i64 - 1;
        Ok(Self {
            bracket,
            max_degree,
        })
    }

    /// Restricts the reported range to `−1..=max_degree`.
    pub fn with_max_degree(l: &LieAlgebra, max_degree: i64) -> Result<Self> {
        let full = l.dim() as i64 - 1;
        if max_degree < -1 || max_degree > full {
            return Err(Error::DegreeOutOfRange {
                degree: max_degree,
                min: -1,
                max: full,
            });
        }
        let mut h = Self::new(l)?;
        h.max_degree = max_degree;
        Ok(h)
    }

    pub fn bracket(&self) -> &Multiderivation {
        &self.bracket
    }

    pub fn algebra(&self) -> LieAlgebra {
        self.bracket.to_lie().expect("arity 2")
    }

    pub fn dim(&self) -> usize {
        self.bracket.ambient()
    }

    pub fn max_degree(&self) -> i64 {
        self.max_degree
    }

    fn check_ambient(&self, c: &Multiderivation) -> Result<()> {
        if c.ambient() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: self.dim(),
                right: c.ambient(),
            });
        }
        Ok(())
    }

    /// `δc = ⟦b, c⟧`.
    pub fn differential(&self, c: &Multiderivation) -> Result<Multiderivation> {
        self.check_ambient(c)?;
        gerstenhaber_bracket(&self.bracket, c)
    }

    /// The two-sum formula
    /// `δc(α_0..α_{k+1}) = Σ_i (−1)^i [α_i, c(..α̂_i..)]
    ///                   + Σ_{i<j} (−1)^{i+j} c([α_i,α_j], ..α̂_i..α̂_j..)`,
    /// evaluated literally on basis tuples.
    pub fn differential_explicit(&self, c: &Multiderivation) -> Result<Multiderivation> {
        self.check_ambient(c)?;
        let n = self.dim();
        let b = &self.bracket;
        let arity = c.arity() + 1;
        let mut out = Multiderivation::zero(n, arity);
        for (t, tuple) in tuples_for(n, arity).iter().enumerate() {
            let mut acc = vec![Rational::zero(); n];
            for i in 0..arity {
                let mut rest = tuple.clone();
                let xi = rest.remove(i);
                let inner = c.eval_basis(&rest);
                let mut unit = vec![Rational::zero(); n];
                unit[xi] = int(1);
                let v = b.eval(&[unit, inner]);
                let s = sign(i as i64);
                for (o, x) in acc.iter_mut().zip(v) {
                    *o += &s * x;
                }
            }
            for i in 0..arity {
                for j in i + 1..arity {
                    let bij = b.eval_basis(&[tuple[i], tuple[j]]);
                    let rest: Vec<usize> = tuple
                        .iter()
                        .enumerate()
                        .filter(|&(p, _)| p != i && p != j)
                        .map(|(_, &x)| x)
                        .collect();
                    let s = sign((i + j) as i64);
                    for (l, w) in bij.iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        let mut args = vec![l];
                        args.extend(&rest);
                        let v = c.eval_basis(&args);
                        let coef = &s * w;
                        for (o, x) in acc.iter_mut().zip(v) {
                            *o += &coef * x;
                        }
                    }
                }
            }
            out.value_at_mut(t).clone_from_slice(&acc);
        }
        Ok(out)
    }

    /// Matrix of `δ : C^k_def → C^{k+1}_def`, assembled column by column
    /// from `⟦b, −⟧` on coordinate basis elements.
    pub fn matrix(&self, k: i64) -> Result<RationalMatrix> {
        let n = self.dim();
        let top = n as i64 - 1;
        if k < -1 || k > top {
            return Err(Error::DegreeOutOfRange {
                degree: k,
                min: -1,
                max: top,
            });
        }
        let arity = (k + 1) as usize;
        let cols: Vec<Vec<Rational>> = (0..space_dim(n, arity))
            .map(|i| {
                self.differential(&Multiderivation::unit(n, arity, i))
                    .expect("same ambient")
                    .coeffs()
                    .to_vec()
            })
            .collect();
        Ok(RationalMatrix::from_columns(space_dim(n, arity + 1), &cols))
    }

    /// The complex on `−1..=min(max_degree + 1, dim − 1)`; the extra degree
    /// keeps the top reported cohomology honest.
    pub fn complex(&self) -> FiniteComplex {
        let n = self.dim();
        let hi = (self.max_degree + 1).min(n as i64 - 1).max(-1);
        let dims = (-1..=hi).map(|k| space_dim(n, (k + 1) as usize)).collect();
        let diffs = (-1..hi).map(|k| self.matrix(k).expect("in range")).collect();
        FiniteComplex::new(-1, dims, diffs).expect("δ² = 0 for a Lie bracket")
    }

    pub fn cohomology(&self, k: i64) -> Result<Cohomology> {
        if k < -1 || k > self.max_degree {
            return Err(Error::DegreeOutOfRange {
                degree: k,
                min: -1,
                max: self.max_degree,
            });
        }
        self.complex().cohomology(k)
    }
}

/// `H^k_def(𝔤)` for `−1 ≤ k ≤ dim − 1`.
pub fn def_cohomology(l: &LieAlgebra, k: i64) -> Result<Cohomology> {
    DeformationComplex::new(l)?.cohomology(k)
}
