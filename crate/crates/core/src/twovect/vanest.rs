//! The van Est map from normalized groupoid cochains of `C ⋉ V₀ ⇉ V₀` to
//! deformation cochains of its LA-vector space, read out in the reduced
//! three-term coordinates.
//!
//! Everything is evaluated exactly. Sections of the algebroid `A = V₀ × C`
//! are affine maps `α(v) = Lv + a`; the right-invariant field is
//! `→α(c, v) = (α(∂c + v), 0)`, whose flow from the unit at `v` has velocity
//! `α(v)` at `ε = 0`. Cochains are multilinear, so only these first-order jets
//! enter. Intermediate cochains are affine vector fields on `C ⊕ V₀`, closed
//! under the bracket.
//!
//! Readout of an algebroid cochain uses `δα = ad_α` on sections:
//! degree −1 is the section itself, degree 0 is `(−φ_C, σ)` where `φ_C` is the
//! action on constant sections and `σ` the symbol, degree 1 is `−σ` on
//! constant sections. The symbol needs a nonzero core to be observed.

use serde::Serialize;

use super::groupoid::{normalized_subcomplex, reduced_dim, reduced_inclusion, GroupoidCochain};
use super::lav::{unflatten, LAVectorSpace};
use crate::error::{Error, Result};
use crate::exactla::{Rational, RationalMatrix};

/// A cochain of the three-term complex in degrees `−1..1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducedCochain {
    /// `Hom(V₀, C)`, `m × p`.
    Minus1(RationalMatrix),
    /// `End C ⊕ End V₀`.
    Zero { core: RationalMatrix, side: RationalMatrix },
    /// `Hom(C, V₀)`, `p × m`.
    One(RationalMatrix),
}

impl ReducedCochain {
    pub fn degree(&self) -> i64 {
        match self {
            Self::Minus1(_) => -1,
            Self::Zero { .. } => 0,
            Self::One(_) => 1,
        }
    }

    pub fn to_vector(&self) -> Vec<Rational> {
        match self {
            Self::Minus1(g) | Self::One(g) => g.entries().to_vec(),
            Self::Zero { core, side } => {
                let mut v = core.entries().to_vec();
                v.extend_from_slice(side.entries());
                v
            }
        }
    }

    pub fn from_vector(lav: &LAVectorSpace, degree: i64, v: &[Rational]) -> Result<Self> {
        let (m, p) = (lav.core_dim(), lav.side_dim());
        if !(-1..=1).contains(&degree) {
            return Err(Error::DegreeOutOfRange { degree, min: -1, max: 1 });
        }
        if v.len() != reduced_dim(lav, degree) {
            return Err(Error::ShapeMismatch(format!(
                "degree {degree} has {} coordinates, got {}",
                reduced_dim(lav, degree),
                v.len()
            )));
        }
        Ok(match degree {
            -1 => Self::Minus1(unflatten(m, p, v)),
            0 => Self::Zero {
                core: unflatten(m, m, &v[..m * m]),
                side: unflatten(p, p, &v[m * m..]),
            },
            _ => Self::One(unflatten(p, m, v)),
        })
    }
}

/// `z ↦ Mz + u` on `C ⊕ V₀`.
#[derive(Clone, Debug)]
struct AffineField {
    m: RationalMatrix,
    u: Vec<Rational>,
}

impl AffineField {
    /// `[X, Y] = (M_Y M_X − M_X M_Y) z + (M_Y u_X − M_X u_Y)`.
    fn bracket(&self, y: &Self) -> Self {
        let m = y.m.dot(&self.m).sub(&self.m.dot(&y.m)).expect("square");
        let a = y.m.apply(&self.u);
        let b = self.m.apply(&y.u);
        Self {
            m,
            u: a.iter().zip(&b).map(|(a, b)| a - b).collect(),
        }
    }
}

/// `α(v) = Lv + a`, a section of `V₀ × C → V₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Section {
    lin: RationalMatrix,
    cst: Vec<Rational>,
}

impl Section {
    fn core(lav: &LAVectorSpace, i: usize) -> Self {
        let mut cst = vec![crate::exactla::rational::zero(); lav.core_dim()];
        cst[i] = crate::exactla::rational::one();
        Self {
            lin: RationalMatrix::zeros(lav.core_dim(), lav.side_dim()),
            cst,
        }
    }

    /// `v ↦ v_j e_i`.
    fn coordinate_times_core(lav: &LAVectorSpace, j: usize, i: usize) -> Self {
        let mut lin = RationalMatrix::zeros(lav.core_dim(), lav.side_dim());
        lin[(i, j)] = crate::exactla::rational::one();
        Self {
            lin,
            cst: vec![crate::exactla::rational::zero(); lav.core_dim()],
        }
    }

    fn is_constant(&self) -> bool {
        self.lin.is_zero()
    }
}

struct Ctx<'a> {
    lav: &'a LAVectorSpace,
    m: usize,
    p: usize,
}

impl Ctx<'_> {
    fn right_invariant(&self, s: &Section) -> AffineField {
        let (m, p) = (self.m, self.p);
        let mut field = RationalMatrix::zeros(m + p, m + p);
        field.set_block(0, 0, &s.lin.dot(self.lav.partial()));
        field.set_block(0, m, &s.lin);
        let mut u = s.cst.clone();
        u.extend(vec![crate::exactla::rational::zero(); p]);
        AffineField { m: field, u }
    }

    /// The `A = ker Ts` component along the units `{(0, v)}`.
    fn restrict(&self, x: &AffineField) -> Section {
        Section {
            lin: x.m.block(0, self.m, self.m, self.p),
            cst: x.u[..self.m].to_vec(),
        }
    }

    /// `R_α` on a vector field, `[X, →α]|_units`.
    fn r0(&self, x: &AffineField, s: &Section) -> Section {
        self.restrict(&x.bracket(&self.right_invariant(s)))
    }

    /// A multiplicative field from a `0`-cochain: `(c, v) ↦ (A₀c + Ev, Fv)`.
    fn field_of(&self, c: &GroupoidCochain) -> AffineField {
        let (m, p) = (self.m, self.p);
        let mut field = RationalMatrix::zeros(m + p, m + p);
        field.set_block(0, 0, &c.gamma1);
        field.set_block(m, m, &c.gamma2);
        AffineField {
            m: field,
            u: vec![crate::exactla::rational::zero(); m + p],
        }
    }

    /// `R_α` on a `1`-cochain: `−(d/dε) c(c₀, Φ_ε(w)⁻¹)` at `ε = 0`. The inverse
    /// flow `(−c(ε), w + ∂c(ε))` has velocity `(−α(w), ∂α(w))`.
    fn r1(&self, c: &GroupoidCochain, s: &Section) -> AffineField {
        let (m, p) = (self.m, self.p);
        let d = self.lav.partial();
        // x ↦ (0, −x, ∂x) into C² ⊕ V₀ and x ↦ (−x, ∂x) into C ⊕ V₀.
        let neg = RationalMatrix::identity(m).neg();
        let mut j1 = RationalMatrix::zeros(2 * m + p, m);
        j1.set_block(m, 0, &neg);
        j1.set_block(2 * m, 0, d);
        let j2 = neg.vstack(d).expect("m columns");
        let g1 = c.gamma1.dot(&j1);
        let g2 = c.gamma2.dot(&j2);
        let mut field = RationalMatrix::zeros(m + p, m + p);
        field.set_block(0, m, &g1.dot(&s.lin).neg());
        field.set_block(m, m, &g2.dot(&s.lin).neg());
        let mut u: Vec<Rational> = g1.apply(&s.cst).iter().map(|x| -x).collect();
        u.extend(g2.apply(&s.cst).iter().map(|x| -x));
        AffineField { m: field, u }
    }

    /// `VE(c)(α₀) = R_{α₀} c`.
    fn ve0(&self, c: &GroupoidCochain, a0: &Section) -> Section {
        self.r0(&self.field_of(c), a0)
    }

    /// `VE(c)(α₀, α₁) = R_{α₁}R_{α₀}c − R_{α₀}R_{α₁}c`.
    fn ve1(&self, c: &GroupoidCochain, a0: &Section, a1: &Section) -> Section {
        let x = self.r0(&self.r1(c, a0), a1);
        let y = self.r0(&self.r1(c, a1), a0);
        Section {
            lin: x.lin.sub(&y.lin).expect("m × p"),
            cst: x.cst.iter().zip(&y.cst).map(|(a, b)| a - b).collect(),
        }
    }
}

fn not_linear(what: &str) -> Error {
    Error::Validation(format!("van Est image is not a linear cochain: {what}"))
}

/// The van Est map on a normalized cochain given in reduced coordinates,
/// returning the algebroid cochain in reduced coordinates.
pub fn van_est_reduced(lav: &LAVectorSpace, c: &ReducedCochain) -> Result<ReducedCochain> {
    let (m, p) = (lav.core_dim(), lav.side_dim());
    let degree = c.degree();
    if degree == -1 {
        // Both sides are sections of A; no R is applied.
        return Ok(c.clone());
    }
    if m == 0 {
        return Err(Error::Unsupported(
            "the van Est readout needs a nonzero core to observe symbols".into(),
        ));
    }
    let full = reduced_inclusion(lav, degree).apply(&c.to_vector());
    let g = GroupoidCochain::from_vector(lav, degree, &full)?;
    let ctx = Ctx { lav, m, p };
    if degree == 0 {
        // φ_C from constant sections.
        let mut phi = RationalMatrix::zeros(m, m);
        let mut d_core = Vec::with_capacity(m);
        for i in 0..m {
            let out = ctx.ve0(&g, &Section::core(lav, i));
            if !out.is_constant() {
                return Err(not_linear("constant section sent to a nonconstant one"));
            }
            for r in 0..m {
                phi[(r, i)] = out.cst[r].clone();
            }
            d_core.push(out);
        }
        // σ(v_j) e₀ = D(v_j e₀) − v_j D(e₀).
        let mut sigma = RationalMatrix::zeros(p, p);
        for j in 0..p {
            let out = ctx.ve0(&g, &Section::coordinate_times_core(lav, j, 0));
            let mut lin = out.lin.clone();
            for r in 0..m {
                lin[(r, j)] -= &d_core[0].cst[r];
            }
            if out.cst.iter().any(|x| !num_traits::Zero::is_zero(x)) || (1..m).any(|r| (0..p).any(|l| !num_traits::Zero::is_zero(&lin[(r, l)]))) {
                return Err(not_linear("symbol is not a linear vector field"));
            }
            for l in 0..p {
                sigma[(j, l)] = lin[(0, l)].clone();
            }
        }
        return Ok(ReducedCochain::Zero {
            core: phi.neg(),
            side: sigma,
        });
    }
    // Degree 1: σ(e_i)(v_j) e₀ = VE(e_i, v_j e₀) − v_j VE(e_i, e₀).
    let mut psi = RationalMatrix::zeros(p, m);
    for i in 0..m {
        let a = Section::core(lav, i);
        let base = ctx.ve1(&g, &a, &Section::core(lav, 0));
        if !base.is_constant() {
            return Err(not_linear("two constant sections give a nonconstant one"));
        }
        for j in 0..p {
            let out = ctx.ve1(&g, &a, &Section::coordinate_times_core(lav, j, 0));
            let mut lin = out.lin.clone();
            for r in 0..m {
                lin[(r, j)] -= &base.cst[r];
            }
            if !lin.is_zero() || (1..m).any(|r| !num_traits::Zero::is_zero(&out.cst[r])) {
                return Err(not_linear("symbol on a constant section is not constant"));
            }
            psi[(j, i)] = out.cst[0].clone();
        }
    }
    Ok(ReducedCochain::One(psi.neg()))
}

/// Matrix of the van Est map in degree `k`, reduced coordinates on both sides.
pub fn van_est_matrix(lav: &LAVectorSpace, k: i64) -> Result<RationalMatrix> {
    let n = reduced_dim(lav, k);
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![crate::exactla::rational::zero(); n];
        e[j] = crate::exactla::rational::one();
        cols.push(van_est_reduced(lav, &ReducedCochain::from_vector(lav, k, &e)?)?.to_vector());
    }
    Ok(RationalMatrix::from_columns(n, &cols))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanEstReport {
    pub degrees: Vec<i64>,
    /// `Some(±1)` when the map is that multiple of the identity on a full
    /// basis, `None` for an empty degree.
    pub signs: Vec<Option<i64>>,
    /// Whether every degree is `±identity`.
    pub scalar: bool,
    /// Whether `VE ∘ d_norm = δ ∘ VE` against the three-term differential.
    pub chain_map: bool,
    pub passed: bool,
}

pub fn van_est_report(lav: &LAVectorSpace) -> Result<VanEstReport> {
    let degrees: Vec<i64> = (-1..=1).collect();
    let mut signs = Vec::new();
    let mut scalar = true;
    let mut ve = Vec::new();
    for &k in &degrees {
        let mat = van_est_matrix(lav, k)?;
        let n = mat.rows();
        let s = if n == 0 {
            None
        } else if mat == RationalMatrix::identity(n) {
            Some(1)
        } else if mat == RationalMatrix::identity(n).neg() {
            Some(-1)
        } else {
            scalar = false;
            None
        };
        signs.push(s);
        ve.push(mat);
    }
    let norm = normalized_subcomplex(lav)?.complex;
    let three = super::lav::three_term_complex(lav);
    let chain_map = (0..2).all(|i| {
        let k = i as i64 - 1;
        ve[i + 1].dot(&norm.differential(k)) == three.differential(k).dot(&ve[i])
    });
    Ok(VanEstReport {
        degrees,
        signs,
        scalar,
        chain_map,
        passed: scalar && chain_map,
    })
}

/// Degreewise sign of the van Est map in the reduced readout, degrees `−1..1`.
pub fn expected_sign_table() -> [i64; 3] {
    [1, 1, -1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn lav(rows: &[&[i64]]) -> LAVectorSpace {
        LAVectorSpace::new(RationalMatrix::from_i64(rows))
    }

    #[test]
    fn identity_in_degree_minus_one() {
        let l = lav(&[&[1, 2]]);
        let g = ReducedCochain::Minus1(RationalMatrix::from_i64(&[&[3], &[4]]));
        assert_eq!(van_est_reduced(&l, &g).unwrap(), g);
    }

    #[test]
    fn degree_zero_with_zero_partial() {
        let l = LAVectorSpace::new(RationalMatrix::zeros(2, 1));
        let c = ReducedCochain::Zero {
            core: RationalMatrix::identity(1),
            side: RationalMatrix::identity(2),
        };
        assert_eq!(van_est_reduced(&l, &c).unwrap(), c);
    }

    #[test]
    fn degree_one_flips_sign() {
        let l = lav(&[&[1, 0], &[2, 1]]);
        let b = RationalMatrix::from_i64(&[&[1, -2], &[0, 5]]);
        let out = van_est_reduced(&l, &ReducedCochain::One(b.clone())).unwrap();
        assert_eq!(out, ReducedCochain::One(b.neg()));
    }

    #[test]
    fn report_on_a_generic_map() {
        let l = lav(&[&[1, 2, 0], &[0, 0, 3]]);
        let r = van_est_report(&l).unwrap();
        assert!(r.passed, "{r:?}");
        let want: Vec<Option<i64>> = expected_sign_table().iter().map(|&s| Some(s)).collect();
        assert_eq!(r.signs, want);
    }

    #[test]
    fn empty_core_is_unsupported() {
        let l = LAVectorSpace::new(RationalMatrix::zeros(2, 0));
        let c = ReducedCochain::Zero {
            core: RationalMatrix::zeros(0, 0),
            side: RationalMatrix::scalar(2, int(1)),
        };
        assert!(matches!(van_est_reduced(&l, &c), Err(Error::Unsupported(_))));
    }
}
