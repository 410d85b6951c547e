//! VB-algebras over a point: a representation `θ` of `𝔤` on a core `C`,
//! with total algebra `𝔨 = 𝔤 ⋉ C`, and the weight grading of
//! multiderivations on `𝔨`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::defdgla::multider::{tuples_for, Multiderivation};
use crate::error::{Error, Result};
use crate::exactla::{int, RationalMatrix};
use crate::liecore::{semidirect_product, LieAlgebra, Representation};

#[derive(Clone, Debug)]
pub struct VBAlgebra {
    theta: Representation,
    kk: LieAlgebra,
}

impl VBAlgebra {
    pub fn new(theta: Representation) -> Self {
        let kk = semidirect_product(&theta);
        Self { theta, kk }
    }

    pub fn g(&self) -> &LieAlgebra {
        self.theta.algebra()
    }

    pub fn theta(&self) -> &Representation {
        &self.theta
    }

    /// `𝔤 ⋉ C`, basis `𝔤` first.
    pub fn kk(&self) -> &LieAlgebra {
        &self.kk
    }

    pub fn n(&self) -> usize {
        self.g().dim()
    }

    pub fn m(&self) -> usize {
        self.theta.dim()
    }

    pub fn total_dim(&self) -> usize {
        self.n() + self.m()
    }

    pub fn is_core(&self, i: usize) -> bool {
        i >= self.n()
    }

    /// `(#C inputs) − [output ∈ C]` for one coordinate.
    pub fn weight_of(&self, tuple: &[usize], output: usize) -> i64 {
        let inputs = tuple.iter().filter(|&&i| self.is_core(i)).count() as i64;
        inputs - i64::from(self.is_core(output))
    }

    /// Weight of every coordinate of an arity-`k` multiderivation on `𝔨`.
    pub fn coordinate_weights(&self, arity: usize) -> Vec<i64> {
        let d = self.total_dim();
        let mut w = Vec::new();
        for t in tuples_for(d, arity) {
            for r in 0..d {
                w.push(self.weight_of(&t, r));
            }
        }
        w
    }

    /// `h_λ`: identity on `𝔤`, `λ` on `C`.
    pub fn scaling(&self, lambda: i64) -> RationalMatrix {
        let mut h = RationalMatrix::identity(self.total_dim());
        for i in self.n()..self.total_dim() {
            h[(i, i)] = int(lambda);
        }
        h
    }

    fn check(&self, c: &Multiderivation) -> Result<()> {
        if c.ambient() != self.total_dim() {
            return Err(Error::AmbientMismatch {
                left: self.total_dim(),
                right: c.ambient(),
            });
        }
        Ok(())
    }

    /// Splits `c` into homogeneous components, one per weight in
    /// `−1..=arity`.
    pub fn weight_decompose(&self, c: &Multiderivation) -> Result<WeightDecomposition> {
        self.check(c)?;
        let weights = self.coordinate_weights(c.arity());
        let mut components = BTreeMap::new();
        for q in -1..=c.arity() as i64 {
            let coeffs = c
                .coeffs()
                .iter()
                .zip(&weights)
                .map(|(x, &w)| if w == q { x.clone() } else { Zero::zero() })
                .collect();
            components.insert(
                q,
                Multiderivation::from_coeffs(c.ambient(), c.arity(), coeffs)?,
            );
        }
        debug_assert!(weights.iter().all(|&w| w >= -1 && w <= c.arity() as i64));
        Ok(WeightDecomposition {
            input: c.clone(),
            components,
        })
    }

    /// Weight-0 part.
    pub fn linearize(&self, c: &Multiderivation) -> Result<Multiderivation> {
        Ok(self.weight_decompose(c)?.component(0))
    }

    /// Weight-(−1) part.
    pub fn core_part(&self, c: &Multiderivation) -> Result<Multiderivation> {
        Ok(self.weight_decompose(c)?.component(-1))
    }

    /// The nonzero weights present in `c`.
    pub fn weights_present(&self, c: &Multiderivation) -> Result<Vec<i64>> {
        Ok(self
            .weight_decompose(c)?
            .components
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(q, _)| *q)
            .collect())
    }
}

#[derive(Clone, Debug)]
pub struct WeightDecomposition {
    pub input: Multiderivation,
    pub components: BTreeMap<i64, Multiderivation>,
}

impl WeightDecomposition {
    pub fn component(&self, q: i64) -> Multiderivation {
        self.components
            .get(&q)
            .cloned()
            .unwrap_or_else(|| Multiderivation::zero(self.input.ambient(), self.input.arity()))
    }

    pub fn sum(&self) -> Multiderivation {
        self.components
            .values()
            .fold(Multiderivation::zero(self.input.ambient(), self.input.arity()), |acc, c| {
                acc.add(c).expect("same shape")
            })
    }
}
