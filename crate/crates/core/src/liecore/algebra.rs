//! Lie algebras given by structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{int, Rational, RationalMatrix};

/// Bracket on a basis `x_0, …, x_{n-1}`: `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
///
/// Construction only checks skewness; [`LieAlgebra::new`] additionally
/// demands a vanishing Jacobiator. Tensors that fail Jacobi are still
/// representable so that their defect can be measured.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    // Index (i * n + j) * n + k.
    structure: Vec<Rational>,
    names: Option<Vec<String>>,
}

/// Jacobiator on basis triples together with the verdict.
#[derive(Clone, Debug)]
pub struct JacobiDefect {
    dim: usize,
    values: Vec<Vec<Rational>>,
    pub is_lie: bool,
}

impl JacobiDefect {
    /// `[[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]`.
    pub fn at(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        &self.values[(i * self.dim + j) * self.dim + k]
    }

    /// First triple `i < j < k` with a nonzero value.
    pub fn first_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.at(i, j, k).iter().any(|x| !x.is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

impl LieAlgebra {
    /// Skew tensor with no Jacobi check.
    pub fn from_tensor(dim: usize, structure: Vec<Rational>) -> Result<Self> {
        if structure.len() != dim * dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "structure tensor of length {} for dimension {dim}",
                structure.len()
            )));
        }
        let l = Self {
            dim,
            structure,
            names: None,
        };
        l.check_skew()?;
        Ok(l)
    }

    /// Validated Lie algebra: skew and Jacobi.
    pub fn new(dim: usize, structure: Vec<Rational>) -> Result<Self> {
        let l = Self::from_tensor(dim, structure)?;
        l.validate()?;
        Ok(l)
    }

    /// Skew tensor from brackets `[x_i, x_j] ∋ value · x_k` with `i < j`.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut structure = vec![Rational::zero(); dim * dim * dim];
        for (i, j, k, v) in brackets {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::ShapeMismatch(format!(
                    "bracket index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            if i >= j {
                return Err(Error::NotSkew { i, j });
            }
            structure[(i * dim + j) * dim + k] += v;
            structure[(j * dim + i) * dim + k] -= v;
        }
        Self::from_tensor(dim, structure)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::from_tensor(dim, vec![Rational::zero(); dim * dim * dim]).expect("zero is skew")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.names = Some(names);
        self
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Index of a named basis element.
    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|n| n == name)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure(&self) -> &[Rational] {
        &self.structure
    }

    fn check_skew(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if self.c(i, j, k) != &-self.c(j, i, k).clone() {
                        return Err(Error::NotSkew { i, j });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[x_i, x_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let s = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(x_i)`: entry `(k, j)` is `c[i][j][k]`.
    pub fn ad(&self, i: usize) -> RationalMatrix {
        let n = self.dim;
        let mut m = RationalMatrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m[(k, j)] = self.c(i, j, k).clone();
            }
        }
        m
    }

    pub fn ad_vector(&self, x: &[Rational]) -> RationalMatrix {
        let n = self.dim;
        let mut m = RationalMatrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.ad(i).scale(xi)).expect("same shape");
            }
        }
        m
    }

    pub fn jacobi_defect(&self) -> JacobiDefect {
        let n = self.dim;
        let unit = |i: usize| -> Vec<Rational> {
            let mut v = vec![Rational::zero(); n];
            v[i] = int(1);
            v
        };
        let mut values = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = self.bracket(&self.bracket_basis(i, j), &unit(k));
                    let b = self.bracket(&self.bracket_basis(j, k), &unit(i));
                    let c = self.bracket(&self.bracket_basis(k, i), &unit(j));
                    values.push(
                        a.iter()
                            .zip(&b)
                            .zip(&c)
                            .map(|((a, b), c)| a + b + c)
                            .collect(),
                    );
                }
            }
        }
        let is_lie = values.iter().all(|v: &Vec<Rational>| v.iter().all(Zero::is_zero));
        JacobiDefect {
            dim: n,
            values,
            is_lie,
        }
    }

    pub fn is_lie(&self) -> bool {
        self.jacobi_defect().is_lie
    }

    pub fn validate(&self) -> Result<()> {
        let jd = self.jacobi_defect();
        match jd.first_violation() {
            Some((i, j, k)) => Err(Error::NotLie { i, j, k }),
            None => Ok(()),
        }
    }

    /// Structure constants in the basis `x'_i = φ x_i`:
    /// `[u, v]' = φ⁻¹ [φ u, φ v]`, so `φ` is an isomorphism onto `self`.
    pub fn transform(&self, phi: &RationalMatrix) -> Result<Self> {
        let n = self.dim;
        if phi.shape() != (n, n) {
            return Err(Error::ShapeMismatch("basis change has the wrong size".into()));
        }
        let inv = phi.inverse()?;
        let cols = phi.columns();
        let mut structure = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let v = inv.apply(&self.bracket(&cols[i], &cols[j]));
                for (k, x) in v.into_iter().enumerate() {
                    structure[(i * n + j) * n + k] = x;
                }
            }
        }
        Ok(Self {
            dim: n,
            structure,
            names: None,
        })
    }

    /// Center as the common kernel of the `ad(x_i)`, rows stacked.
    pub fn center_dim(&self) -> usize {
        let n = self.dim;
        let mut stacked = RationalMatrix::zeros(0, n);
        for i in 0..n {
            // [x_i, z] for z ranging: that is ad(x_i).
            stacked = stacked.vstack(&self.ad(i)).expect("same width");
        }
        n - stacked.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::catalog;

    #[test]
    fn abelian_is_lie() {
        let l = LieAlgebra::abelian(3);
        assert!(l.jacobi_defect().is_lie);
    }

    #[test]
    fn sl2_is_lie() {
        assert!(catalog::sl2().jacobi_defect().is_lie);
    }

    #[test]
    fn non_jacobi_example() {
        let l = catalog::non_jacobi3();
        let jd = l.jacobi_defect();
        assert!(!jd.is_lie);
        // Hand evaluation: [e1,e3] + [e2,e1] + 0 = -e1.
        assert_eq!(jd.at(0, 1, 2), &[int(-1), int(0), int(0)]);
        assert_eq!(l.validate(), Err(Error::NotLie { i: 0, j: 1, k: 2 }));
    }

    #[test]
    fn diagonal_must_vanish() {
        let mut s = vec![Rational::zero(); 8];
        s[1] = int(1); // c[0][0][1]
        assert_eq!(LieAlgebra::from_tensor(2, s), Err(Error::NotSkew { i: 0, j: 0 }));
    }

    #[test]
    fn transform_by_identity_is_noop() {
        let l = catalog::sl2();
        let t = l.transform(&RationalMatrix::identity(3)).unwrap();
        assert_eq!(t.structure(), l.structure());
    }

    #[test]
    fn centers() {
        assert_eq!(catalog::sl2().center_dim(), 0);
        assert_eq!(catalog::heisenberg3().center_dim(), 1);
        assert_eq!(catalog::aff1().center_dim(), 0);
        assert_eq!(LieAlgebra::abelian(4).center_dim(), 4);
    }
}
