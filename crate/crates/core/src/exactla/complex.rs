//! Bounded cochain complexes of finite-dimensional rational vector spaces.

use super::matrix::RationalMatrix;
use super::rational::{sign, Rational};
use crate::error::{Error, Result};

/// A cochain complex concentrated in degrees `min_degree..=max_degree`.
///
/// Terms of dimension zero are stored explicitly. Differentials out of the
/// top degree and into the bottom degree are zero maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteComplex {
    min_degree: i64,
    dims: Vec<usize>,
    // diffs[i] : term(min + i) -> term(min + i + 1)
    diffs: Vec<RationalMatrix>,
}

impl FiniteComplex {
    /// Validates shapes and `d ∘ d = 0`.
    pub fn new(min_degree: i64, dims: Vec<usize>, diffs: Vec<RationalMatrix>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::ShapeMismatch("a complex needs at least one term".into()));
        }
        if diffs.len() + 1 != dims.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} terms need {} differentials, got {}",
                dims.len(),
                dims.len() - 1,
                diffs.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.shape() != (dims[i + 1], dims[i]) {
                return Err(Error::ShapeMismatch(format!(
                    "differential at degree {} is {:?}, expected {:?}",
                    min_degree + i as i64,
                    d.shape(),
                    (dims[i + 1], dims[i])
                )));
            }
        }
        for i in 0..diffs.len().saturating_sub(1) {
            if !diffs[i + 1].dot(&diffs[i]).is_zero() {
                return Err(Error::NotAComplex {
                    degree: min_degree + i as i64,
                });
            }
        }
        Ok(Self {
            min_degree,
            dims,
            diffs,
        })
    }

    /// The complex with the given terms and zero differentials.
    pub fn zero_differentials(min_degree: i64, dims: Vec<usize>) -> Result<Self> {
        let diffs = dims
            .windows(2)
            .map(|w| RationalMatrix::zeros(w[1], w[0]))
            .collect();
        Self::new(min_degree, dims, diffs)
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.min_degree..=self.max_degree()
    }

    fn slot(&self, k: i64) -> Option<usize> {
        if k < self.min_degree || k > self.max_degree() {
            None
        } else {
            Some((k - self.min_degree) as usize)
        }
    }

    /// Dimension of the term in degree `k`; zero outside the range.
    pub fn dim(&self, k: i64) -> usize {
        self.slot(k).map_or(0, |i| self.dims[i])
    }

    pub fn term_dims(&self) -> &[usize] {
        &self.dims
    }

    /// `d_k : term k → term k+1`, a zero map of the right shape outside the
    /// stored range.
    pub fn differential(&self, k: i64) -> RationalMatrix {
        match self.slot(k) {
            Some(i) if i < self.diffs.len() => self.diffs[i].clone(),
            _ => RationalMatrix::zeros(self.dim(k + 1), self.dim(k)),
        }
    }

    fn check_degree(&self, k: i64) -> Result<()> {
        if self.slot(k).is_none() {
            return Err(Error::DegreeOutOfRange {
                degree: k,
                min: self.min_degree,
                max: self.max_degree(),
            });
        }
        Ok(())
    }

    /// Cohomology in degree `k` with RREF-pinned representatives.
    pub fn cohomology(&self, k: i64) -> Result<Cohomology> {
        self.check_degree(k)?;
        Ok(Cohomology::compute(
            &self.differential(k),
            &self.differential(k - 1),
            self.dim(k),
        ))
    }

    pub fn cohomology_dim(&self, k: i64) -> Result<usize> {
        self.check_degree(k)?;
        let n = self.dim(k);
        Ok(n - self.differential(k).rank() - self.differential(k - 1).rank())
    }

    pub fn cohomology_dims(&self) -> Vec<usize> {
        self.degrees()
            .map(|k| self.cohomology_dim(k).expect("degree in range"))
            .collect()
    }

    /// `X[n]`: `X[n]^k = X^{k+n}` with differential `(-1)^n d`.
    pub fn shift(&self, n: i64) -> Self {
        let s = sign(n);
        Self {
            min_degree: self.min_degree - n,
            dims: self.dims.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&s)).collect(),
        }
    }

    /// Degreewise direct sum; the range is the union of both ranges.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().max(other.max_degree());
        let dims = (lo..=hi).map(|k| self.dim(k) + other.dim(k)).collect();
        let diffs = (lo..hi)
            .map(|k| self.differential(k).direct_sum(&other.differential(k)))
            .collect();
        Self::new(lo, dims, diffs).expect("direct sum of complexes is a complex")
    }

    /// Brutal truncation to `lo..=hi` (a subrange of the stored range).
    pub fn truncate(&self, lo: i64, hi: i64) -> Result<Self> {
        self.check_degree(lo)?;
        self.check_degree(hi)?;
        if lo > hi {
            return Err(Error::DegreeOutOfRange {
                degree: lo,
                min: self.min_degree,
                max: hi,
            });
        }
        let dims = (lo..=hi).map(|k| self.dim(k)).collect();
        let diffs = (lo..hi).map(|k| self.differential(k)).collect();
        Self::new(lo, dims, diffs)
    }

    /// Conjugates every term by the given invertible matrices: the new
    /// differential is `P_{k+1} d_k P_k^{-1}`.
    pub fn conjugate(&self, changes: &[RationalMatrix]) -> Result<Self> {
        if changes.len() != self.dims.len() {
            return Err(Error::ShapeMismatch("one basis change per term".into()));
        }
        let inverses = changes
            .iter()
            .map(RationalMatrix::inverse)
            .collect::<Result<Vec<_>>>()?;
        let diffs = self
            .diffs
            .iter()
            .enumerate()
            .map(|(i, d)| changes[i + 1].dot(d).dot(&inverses[i]))
            .collect();
        Self::new(self.min_degree, self.dims.clone(), diffs)
    }
}

/// One cohomology space together with the data needed to name classes.
#[derive(Clone, Debug)]
pub struct Cohomology {
    /// Columns are cocycles whose classes form a basis.
    pub representatives: RationalMatrix,
    /// Columns span the coboundaries.
    pub boundaries: RationalMatrix,
    kernel: RationalMatrix,
    outgoing: RationalMatrix,
}

impl Cohomology {
    /// `outgoing : V → next`, `incoming : prev → V`.
    pub fn compute(outgoing: &RationalMatrix, incoming: &RationalMatrix, dim: usize) -> Self {
        let kernel = outgoing.kernel_basis();
        let boundaries = incoming.clone();
        debug_assert_eq!(kernel.rows(), dim);
        let stacked = boundaries.hstack(&kernel).expect("same ambient");
        let pivots = stacked.rref().pivots;
        let chosen: Vec<usize> = pivots
            .into_iter()
            .filter(|&p| p >= boundaries.cols())
            .collect();
        let representatives = stacked.select_columns(&chosen);
        Self {
            representatives,
            boundaries,
            kernel,
            outgoing: outgoing.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.representatives.cols()
    }

    pub fn cocycles(&self) -> &RationalMatrix {
        &self.kernel
    }

    pub fn is_cocycle(&self, z: &[Rational]) -> bool {
        self.outgoing.apply(z).iter().all(num_traits::Zero::is_zero)
    }

    /// Coordinates of the class of `z` against the representatives.
    pub fn class_coordinates(&self, z: &[Rational]) -> Result<Vec<Rational>> {
        if z.len() != self.representatives.rows() {
            return Err(Error::ShapeMismatch(format!(
                "cochain of length {} in a term of dimension {}",
                z.len(),
                self.representatives.rows()
            )));
        }
        if !self.is_cocycle(z) {
            return Err(Error::NotCocycle);
        }
        let system = self
            .representatives
            .hstack(&self.boundaries)
            .expect("same ambient");
        let x = system
            .solve(z)
            .expect("representatives and boundaries span the cocycles");
        Ok(x[..self.dim()].to_vec())
    }

    /// Matrix of the map on cohomology induced by `f : V → W`, where `f`
    /// sends cocycles to cocycles of `target`.
    pub fn induced(&self, f: &RationalMatrix, target: &Cohomology) -> Result<RationalMatrix> {
        let cols = self
            .representatives
            .columns()
            .iter()
            .map(|z| target.class_coordinates(&f.apply(z)))
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalMatrix::from_columns(target.dim(), &cols))
    }
}

/// A degreewise family of maps between two complexes that commutes with
/// the differentials.
#[derive(Clone, Debug)]
pub struct ComplexMap {
    source: FiniteComplex,
    target: FiniteComplex,
    lo: i64,
    components: Vec<RationalMatrix>,
}

impl ComplexMap {
    /// `components` are indexed from `lo`, the lowest degree of either
    /// complex, up to the highest; missing trailing degrees are zero.
    pub fn new(
        source: FiniteComplex,
        target: FiniteComplex,
        components: Vec<RationalMatrix>,
    ) -> Result<Self> {
        let lo = source.min_degree().min(target.min_degree());
        let hi = source.max_degree().max(target.max_degree());
        if components.len() as i64 > hi - lo + 1 {
            return Err(Error::ShapeMismatch("too many components".into()));
        }
        let mut full = components;
        for k in lo + full.len() as i64..=hi {
            full.push(RationalMatrix::zeros(target.dim(k), source.dim(k)));
        }
        for (i, f) in full.iter().enumerate() {
            let k = lo + i as i64;
            if f.shape() != (target.dim(k), source.dim(k)) {
                return Err(Error::ShapeMismatch(format!(
                    "component at degree {k} is {:?}, expected {:?}",
                    f.shape(),
                    (target.dim(k), source.dim(k))
                )));
            }
        }
        let map = Self {
            source,
            target,
            lo,
            components: full,
        };
        map.check_chain()?;
        Ok(map)
    }

    pub fn source(&self) -> &FiniteComplex {
        &self.source
    }

    pub fn target(&self) -> &FiniteComplex {
        &self.target
    }

    pub fn component(&self, k: i64) -> RationalMatrix {
        let i = k - self.lo;
        if i >= 0 && (i as usize) < self.components.len() {
            self.components[i as usize].clone()
        } else {
            RationalMatrix::zeros(self.target.dim(k), self.source.dim(k))
        }
    }

    fn hi(&self) -> i64 {
        self.lo + self.components.len() as i64 - 1
    }

    fn check_chain(&self) -> Result<()> {
        for k in self.lo - 1..=self.hi() {
            let left = self.component(k + 1).dot(&self.source.differential(k));
            let right = self.target.differential(k).dot(&self.component(k));
            if left != right {
                return Err(Error::NonChainMap { degree: k });
            }
        }
        Ok(())
    }

    /// Matrix of the induced map `H^k(source) → H^k(target)` in the pinned
    /// representative bases.
    pub fn induced_on_cohomology(&self, k: i64) -> Result<RationalMatrix> {
        let hs = self.source.cohomology(k)?;
        let ht = self.target.cohomology(k)?;
        hs.induced(&self.component(k), &ht)
    }
}

/// `Cone(f)^k = B^k ⊕ A^{k+1}` with `d(b, a) = (d_B b + f a, −d_A a)`.
pub fn mapping_cone(f: &ComplexMap) -> Result<FiniteComplex> {
    f.check_chain()?;
    let a = f.source();
    let b = f.target();
    let lo = b.min_degree().min(a.min_degree() - 1);
    let hi = b.max_degree().max(a.max_degree() - 1);
    let dims: Vec<usize> = (lo..=hi).map(|k| b.dim(k) + a.dim(k + 1)).collect();
    let diffs = (lo..hi)
        .map(|k| {
            let mut d = RationalMatrix::zeros(b.dim(k + 1) + a.dim(k + 2), b.dim(k) + a.dim(k + 1));
            d.set_block(0, 0, &b.differential(k));
            d.set_block(0, b.dim(k), &f.component(k + 1));
            d.set_block(b.dim(k + 1), b.dim(k), &a.differential(k + 1).neg());
            d
        })
        .collect();
    FiniteComplex::new(lo, dims, diffs)
}
