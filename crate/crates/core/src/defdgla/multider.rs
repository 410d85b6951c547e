//! Skew multilinear maps `Λᵏ V → V` over a point.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{binomial, enumerate_tuples, int, IndexTuple, Rational, RationalMatrix, WedgeBasis};
use crate::liecore::LieAlgebra;

/// A skew `k`-linear map on `V = Q^n`, stored by its values on the sorted
/// basis tuples. Coordinate `t·n + r` is component `r` of the value on the
/// `t`-th tuple in lexicographic order, which matches the coordinates of
/// `Cᵏ(𝔤, ad)`.
///
/// Arity 0 is a plain vector. Arities above `n` are legal and always zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiderivation {
    n: usize,
    arity: usize,
    coeffs: Vec<Rational>,
}

pub(crate) fn basis_for(n: usize, k: usize) -> WedgeBasis {
    WedgeBasis::new(n, k.min(n)).expect("k clamped to n")
}

pub(crate) fn tuples_for(n: usize, k: usize) -> Vec<IndexTuple> {
    if k > n {
        Vec::new()
    } else {
        enumerate_tuples(n, k).expect("k <= n")
    }
}

/// Number of coordinates of an arity-`k` multiderivation on `Q^n`.
pub fn space_dim(n: usize, k: usize) -> usize {
    binomial(n, k) * n
}

impl Multiderivation {
    pub fn zero(n: usize, arity: usize) -> Self {
        Self {
            n,
            arity,
            coeffs: vec![Rational::zero(); space_dim(n, arity)],
        }
    }

    pub fn from_coeffs(n: usize, arity: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != space_dim(n, arity) {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for arity {arity} on dimension {n}, expected {}",
                coeffs.len(),
                space_dim(n, arity)
            )));
        }
        Ok(Self { n, arity, coeffs })
    }

    /// The `i`-th coordinate basis element.
    pub fn unit(n: usize, arity: usize, i: usize) -> Self {
        let mut m = Self::zero(n, arity);
        m.coeffs[i] = int(1);
        m
    }

    pub fn from_vector(v: &[Rational]) -> Self {
        Self {
            n: v.len(),
            arity: 0,
            coeffs: v.to_vec(),
        }
    }

    /// An endomorphism as an arity-1 multiderivation.
    pub fn from_matrix(m: &RationalMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::ShapeMismatch("endomorphism must be square".into()));
        }
        let n = m.rows();
        let mut out = Self::zero(n, 1);
        for j in 0..n {
            for i in 0..n {
                out.coeffs[j * n + i] = m[(i, j)].clone();
            }
        }
        Ok(out)
    }

    /// The bracket of a (not necessarily Lie) skew tensor.
    pub fn from_lie(l: &LieAlgebra) -> Self {
        let n = l.dim();
        let mut out = Self::zero(n, 2);
        for (t, pair) in tuples_for(n, 2).iter().enumerate() {
            for k in 0..n {
                out.coeffs[t * n + k] = l.c(pair[0], pair[1], k).clone();
            }
        }
        out
    }

    /// Reads an arity-2 multiderivation back as structure constants.
    pub fn to_lie(&self) -> Result<LieAlgebra> {
        if self.arity != 2 {
            return Err(Error::ArityMismatch(format!(
                "a bracket has arity 2, got {}",
                self.arity
            )));
        }
        let n = self.n;
        let mut brackets = Vec::new();
        for (t, pair) in tuples_for(n, 2).iter().enumerate() {
            for k in 0..n {
                let v = &self.coeffs[t * n + k];
                if !v.is_zero() {
                    brackets.push((pair[0], pair[1], k, v.clone()));
                }
            }
        }
        LieAlgebra::from_brackets(n, &brackets)
    }

    pub fn to_matrix(&self) -> Result<RationalMatrix> {
        if self.arity != 1 {
            return Err(Error::ArityMismatch(format!(
                "an endomorphism has arity 1, got {}",
                self.arity
            )));
        }
        let n = self.n;
        let mut m = RationalMatrix::zeros(n, n);
        for j in 0..n {
            for i in 0..n {
                m[(i, j)] = self.coeffs[j * n + i].clone();
            }
        }
        Ok(m)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Degree in the deformation complex: `arity − 1`.
    pub fn degree(&self) -> i64 {
        self.arity as i64 - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Value on the `t`-th sorted tuple.
    pub fn value_at(&self, t: usize) -> &[Rational] {
        &self.coeffs[t * self.n..(t + 1) * self.n]
    }

    pub(crate) fn value_at_mut(&mut self, t: usize) -> &mut [Rational] {
        let n = self.n;
        &mut self.coeffs[t * n..(t + 1) * n]
    }

    /// Value on basis vectors given in any order; repeated indices give 0.
    pub fn eval_basis(&self, args: &[usize]) -> Vec<Rational> {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        let zero = vec![Rational::zero(); self.n];
        if self.arity > self.n {
            return zero;
        }
        let basis = basis_for(self.n, self.arity);
        match basis.locate(args) {
            None => zero,
            Some((t, 1)) => self.value_at(t).to_vec(),
            Some((t, _)) => self.value_at(t).iter().map(|x| -x).collect(),
        }
    }

    /// Value on arbitrary vectors, by multilinear expansion.
    pub fn eval(&self, args: &[Vec<Rational>]) -> Vec<Rational> {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        let mut out = vec![Rational::zero(); self.n];
        let mut idx = Vec::with_capacity(self.arity);
        self.expand(args, &mut idx, int(1), &mut out);
        out
    }

    fn expand(&self, args: &[Vec<Rational>], idx: &mut Vec<usize>, w: Rational, out: &mut [Rational]) {
        let depth = idx.len();
        if depth == args.len() {
            let v = self.eval_basis(idx);
            for (o, x) in out.iter_mut().zip(v) {
                if !x.is_zero() {
                    *o += &w * x;
                }
            }
            return;
        }
        for (a, x) in args[depth].iter().enumerate() {
            if x.is_zero() || idx.contains(&a) {
                continue;
            }
            idx.push(a);
            self.expand(args, idx, &w * x, out);
            idx.pop();
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(format!(
                "cannot add arities {} and {}",
                self.arity, other.arity
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            n: self.n,
            arity: self.arity,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            n: self.n,
            arity: self.arity,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            n: self.n,
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|x| x * s).collect(),
        }
    }

    /// Largest absolute coefficient, as a float.
    pub fn max_abs(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|x| crate::exactla::rational::to_f64(x).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::catalog;

    #[test]
    fn eval_respects_skewness() {
        let b = Multiderivation::from_lie(&catalog::sl2());
        assert_eq!(b.eval_basis(&[0, 1]), vec![int(0), int(0), int(1)]);
        assert_eq!(b.eval_basis(&[1, 0]), vec![int(0), int(0), int(-1)]);
        assert_eq!(b.eval_basis(&[2, 2]), vec![int(0); 3]);
    }

    #[test]
    fn eval_is_bilinear() {
        let l = catalog::sl2();
        let b = Multiderivation::from_lie(&l);
        let x = vec![int(1), int(2), int(-1)];
        let y = vec![int(0), int(3), int(5)];
        assert_eq!(b.eval(&[x.clone(), y.clone()]), l.bracket(&x, &y));
    }

    #[test]
    fn round_trips() {
        let l = catalog::so3();
        assert_eq!(Multiderivation::from_lie(&l).to_lie().unwrap().structure(), l.structure());
        let m = RationalMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(Multiderivation::from_matrix(&m).unwrap().to_matrix().unwrap(), m);
    }

    #[test]
    fn high_arity_is_empty() {
        let z = Multiderivation::zero(2, 3);
        assert!(z.coeffs().is_empty());
        assert_eq!(z.eval_basis(&[0, 1, 0]), vec![int(0); 2]);
    }
}
