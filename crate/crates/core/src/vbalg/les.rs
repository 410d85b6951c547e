//! The long exact sequence
//! `… → Hᵏ(𝔤, End C) → Hᵏ_lin(𝔨) → Hᵏ_def(𝔤) → Hᵏ⁺¹(𝔤, End C) → …`.

use serde::Serialize;

use super::linear::{end_complex, linear_subcomplex, splitting_matrix, LinearSubcomplex};
use super::vba::VBAlgebra;
use crate::defdgla::DeformationComplex;
use crate::error::Result;
use crate::exactla::{exactness_check, Cohomology, ExactnessReport, FiniteComplex, LinearSequence, RationalMatrix};

#[derive(Clone, Debug, Serialize)]
pub struct LesReport {
    pub min_degree: i64,
    pub max_degree: i64,
    /// One label per node, e.g. `H^0(End)`, `H^0(lin)`, `H^0(def)`.
    pub labels: Vec<String>,
    pub exactness: ExactnessReport,
    /// Exactness over the nodes in the requested degree range; the trailing
    /// `H^{max+1}(End)` node only closes the sequence.
    pub all_exact: bool,
}

fn cohomology_or_zero(cx: &FiniteComplex, k: i64) -> Result<Cohomology> {
    if k < cx.min_degree() || k > cx.max_degree() {
        let z = RationalMatrix::zeros(0, 0);
        return Ok(Cohomology::compute(&z, &z, 0));
    }
    cx.cohomology(k)
}

/// Zero map of the right shape when a degree lies outside a complex.
fn block_or_zero(rows: usize, cols: usize, m: Option<RationalMatrix>) -> RationalMatrix {
    m.unwrap_or_else(|| RationalMatrix::zeros(rows, cols))
}

struct Pieces {
    lin: LinearSubcomplex,
    end: FiniteComplex,
    def: FiniteComplex,
}

impl Pieces {
    fn end_dim(&self, k: i64) -> usize {
        self.end.dim(k)
    }

    fn def_dim(&self, k: i64) -> usize {
        self.def.dim(k)
    }
}

/// Runs the exactness check on degrees `−1..=max_degree`.
pub fn les_check(vba: &VBAlgebra, max_degree: i64) -> Result<LesReport> {
    let lin = linear_subcomplex(vba, max_degree)?;
    let end = end_complex(vba);
    let def = DeformationComplex::new(vba.g())?.complex();
    let p = Pieces { lin, end, def };

    let mut labels = Vec::new();
    let mut spaces: Vec<Cohomology> = Vec::new();
    let mut maps: Vec<RationalMatrix> = Vec::new();
    // Cochain-level maps between consecutive nodes, applied to cocycles.
    let mut cochain_maps: Vec<RationalMatrix> = Vec::new();

    for k in -1..=max_degree {
        let s_k = splitting_matrix(vba, &p.lin, k)?;
        let s_inv = s_k.inverse()?;
        let (e, a) = (p.end_dim(k), p.def_dim(k));
        // Inclusion End → lin: c₁ ↦ S⁻¹(c₁, 0).
        let incl = s_inv.block(0, 0, s_inv.rows(), e);
        // Projection lin → def: rows of c₂.
        let proj = s_k.block(e, 0, a, s_k.cols());
        // Connecting map def^k → End^{k+1}: lift, differentiate, read c₁.
        let e_next = p.end_dim(k + 1);
        let conn = if k < p.lin.complex.max_degree() {
            let s_next = splitting_matrix(vba, &p.lin, k + 1)?;
            let lift = s_inv.block(0, e, s_inv.rows(), a);
            let image = s_next.dot(&p.lin.complex.differential(k)).dot(&lift);
            image.block(0, 0, e_next, a)
        } else {
            block_or_zero(e_next, a, None)
        };

        labels.push(format!("H^{k}(End)"));
        spaces.push(cohomology_or_zero(&p.end, k)?);
        cochain_maps.push(incl);
        labels.push(format!("H^{k}(lin)"));
        spaces.push(cohomology_or_zero(&p.lin.complex, k)?);
        cochain_maps.push(proj);
        labels.push(format!("H^{k}(def)"));
        spaces.push(cohomology_or_zero(&p.def, k)?);
        cochain_maps.push(conn);
    }
    labels.push(format!("H^{}(End)", max_degree + 1));
    spaces.push(cohomology_or_zero(&p.end, max_degree + 1)?);

    for (i, f) in cochain_maps.iter().enumerate() {
        maps.push(spaces[i].induced(f, &spaces[i + 1])?);
    }
    let dims = spaces.iter().map(Cohomology::dim).collect();
    let seq = LinearSequence::new(dims, maps)?;
    let exactness = exactness_check(&seq);
    let last = exactness.nodes.len() - 1;
    let all_exact = exactness.nodes.iter().take(last).all(|n| n.exact);
    Ok(LesReport {
        min_degree: -1,
        max_degree,
        labels,
        exactness,
        all_exact,
    })
}
