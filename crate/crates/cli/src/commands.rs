//! Command bodies. Each takes a validated instance and fills a report; the
//! caller handles loading, timing, rendering and exit codes.

use defcoh::defdgla::gauge::max_abs_diff;
use defcoh::defdgla::{
    conjugation_oracle, gauge_flow, maurer_cartan_residual, pullback, DeformationComplex, Multiderivation,
};
use defcoh::exactla::{format_rational, int, parse_rational, FiniteComplex, Rational};
use defcoh::instance::{Instance, InstanceFile};
use defcoh::liecore::{ce_complex, LieAlgebra, Representation};
use defcoh::random;
use defcoh::twovect::{
    full_complex, normalized_subcomplex, quasi_iso_check, three_term_complex, van_est_report, LAVectorSpace,
};
use defcoh::vbalg::{cone_complex, les_check, linear_subcomplex, splitting_sign_table, VBAlgebra};
use defcoh::Error;
use serde_json::{json, Value};

use crate::report::Report;
use crate::{ComplexKind, Family, Suite};

/// An error with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

pub fn incompatible(what: &str, kind: &str) -> Failure {
    Failure {
        code: 1,
        message: format!("incompatible: {what} does not apply to a {kind} instance"),
    }
}

pub type CmdResult<T> = std::result::Result<T, Failure>;

/// Largest degree the unbounded groupoid complex is built to.
const GROUPOID_MAX_DEGREE: i64 = 6;

pub fn instance_info(file: &InstanceFile, inst: &Instance, path: &str) -> Value {
    json!({
        "path": path,
        "name": file.name,
        "kind": inst.kind(),
        "ambient_dim": inst.ambient_dim(),
        "seed": file.seed,
    })
}

fn representation(inst: &Instance) -> Option<&Representation> {
    match inst {
        Instance::Representation(r) | Instance::VbAlgebra(r) => Some(r),
        _ => None,
    }
}

fn vb_algebra(inst: &Instance, what: &str) -> CmdResult<VBAlgebra> {
    representation(inst)
        .map(|r| VBAlgebra::new(r.clone()))
        .ok_or_else(|| incompatible(what, inst.kind()))
}

fn lav(inst: &Instance, what: &str) -> CmdResult<LAVectorSpace> {
    match inst {
        Instance::LaVectorSpace(l) => Ok(l.clone()),
        _ => Err(incompatible(what, inst.kind())),
    }
}

/// The Lie algebra whose deformations are meant: the algebra itself, or the
/// semidirect product `𝔤 ⋉ C` for a representation.
fn total_algebra(inst: &Instance, what: &str) -> CmdResult<LieAlgebra> {
    match inst {
        Instance::LieAlgebra(l) => Ok(l.clone()),
        Instance::Representation(r) | Instance::VbAlgebra(r) => Ok(VBAlgebra::new(r.clone()).kk().clone()),
        Instance::LaVectorSpace(_) => Err(incompatible(what, inst.kind())),
    }
}

/// A complex whose cohomology is correct in every degree up to `hi`.
fn build_complex(inst: &Instance, kind: ComplexKind, hi: i64) -> CmdResult<FiniteComplex> {
    let name = kind.name();
    Ok(match kind {
        ComplexKind::Ce => match inst {
            Instance::LieAlgebra(l) => ce_complex(&Representation::adjoint(l)),
            _ => ce_complex(representation(inst).ok_or_else(|| incompatible(name, inst.kind()))?),
        },
        ComplexKind::Def => DeformationComplex::new(&total_algebra(inst, name)?)?.complex(),
        // Built one degree past `hi`, so the top reported degree sees its
        // outgoing differential.
        ComplexKind::Linear => linear_subcomplex(&vb_algebra(inst, name)?, hi.max(-1))?.complex,
        ComplexKind::Cone => cone_complex(&vb_algebra(inst, name)?)?,
        ComplexKind::ThreeTerm => three_term_complex(&lav(inst, name)?),
        ComplexKind::GroupoidFull => {
            if hi > GROUPOID_MAX_DEGREE {
                return Err(Failure {
                    code: 1,
                    message: format!("groupoid-full is built up to degree {GROUPOID_MAX_DEGREE}"),
                });
            }
            full_complex(&lav(inst, name)?, hi.max(-1) + 1)?
        }
        ComplexKind::GroupoidNormalized => normalized_subcomplex(&lav(inst, name)?)?.complex,
    })
}

pub fn cohomology(report: &mut Report, inst: &Instance, kind: ComplexKind, degrees: Option<(i64, i64)>) -> CmdResult<()> {
    let default_hi = match kind {
        ComplexKind::GroupoidFull => 2,
        ComplexKind::Linear => 1,
        _ => i64::MIN,
    };
    let probe_hi = degrees.map_or(default_hi, |d| d.1);
    let cx = build_complex(inst, kind, probe_hi)?;
    let (lo, hi) = degrees.unwrap_or_else(|| {
        if default_hi == i64::MIN {
            (cx.min_degree(), cx.max_degree())
        } else {
            (cx.min_degree(), default_hi)
        }
    });
    let mut rows = Vec::new();
    let mut dims = Vec::new();
    for k in lo..=hi {
        let (term, cocycles, coboundaries, dim) = if k < cx.min_degree() || k > cx.max_degree() {
            (0, 0, 0, 0)
        } else {
            let h = cx.cohomology(k)?;
            let term = cx.dim(k);
            let cocycles = h.cocycles().cols();
            let coboundaries = cx.differential(k - 1).rank();
            (term, cocycles, coboundaries, h.dim())
        };
        dims.push(dim);
        rows.push(vec![json!(k), json!(term), json!(cocycles), json!(coboundaries), json!(dim)]);
    }
    report.fact("complex", kind.name());
    report.fact("degrees", format!("{lo}..{hi}"));
    report.fact("dims", json!(dims));
    report.table("cohomology", &["degree", "term", "cocycles", "coboundaries", "dim"], rows);
    Ok(())
}

/// Number of seeded cases for the randomized suites.
const CASES: u64 = 20;

fn mc_suite(report: &mut Report, inst: &Instance, seed: u64) -> CmdResult<()> {
    let l = total_algebra(inst, "the mc suite")?;
    let h = DeformationComplex::new(&l)?;
    let n = l.dim();
    let b = Multiderivation::from_lie(&l);
    let mut rows = Vec::new();
    let mut agree = true;
    for case in 0..CASES {
        let mut g = random::rng(seed.wrapping_add(case));
        // Alternate pullback perturbations, always Maurer-Cartan, with sparse
        // random ones, which mostly are not.
        let (source, t) = match case % 3 {
            0 if case == 0 => ("zero", Multiderivation::zero(n, 2)),
            0 => {
                let phi = random::invertible_matrix(&mut g, n);
                ("pullback", pullback(&phi, &b)?.sub(&b)?)
            }
            1 => ("sparse", random::multiderivation(&mut g, n, 2, 1, 0.2)),
            _ => ("dense", random::multiderivation(&mut g, n, 2, 2, 0.7)),
        };
        let via_equation = maurer_cartan_residual(&h, &t)?.is_zero();
        let via_jacobi = b.add(&t)?.to_lie()?.jacobi_defect().is_lie;
        agree &= via_equation == via_jacobi;
        rows.push(vec![json!(case), json!(source), json!(via_equation), json!(via_jacobi)]);
    }
    let mc = rows.iter().filter(|r| r[2] == json!(true)).count();
    report.table("perturbations", &["case", "source", "maurer_cartan", "jacobi"], rows);
    report.check(
        "mc",
        agree,
        format!("Maurer-Cartan equation ⇔ Jacobi identity on {CASES} perturbations ({mc} solutions)"),
    );
    Ok(())
}

pub fn les(report: &mut Report, inst: &Instance, max_degree: i64) -> CmdResult<()> {
    let vba = vb_algebra(inst, "the les suite")?;
    let r = les_check(&vba, max_degree)?;
    let rows = r
        .labels
        .iter()
        .zip(&r.exactness.nodes)
        .map(|(label, node)| {
            vec![
                json!(label),
                json!(node.dim),
                json!(node.kernel_dim),
                json!(node.image_dim),
                json!(node.exact),
            ]
        })
        .collect();
    report.table("sequence", &["node", "dim", "kernel", "image", "exact"], rows);
    let last = r.labels.len() - 1;
    let witness = r
        .exactness
        .nodes
        .iter()
        .take(last)
        .position(|n| !n.exact)
        .map(|i| format!("not exact at {} (defect {})", r.labels[i], r.exactness.nodes[i].defect));
    report.check(
        "les",
        r.all_exact,
        witness.unwrap_or_else(|| format!("exact at every node, degrees -1..{max_degree}")),
    );
    Ok(())
}

fn split_suite(report: &mut Report, inst: &Instance) -> CmdResult<()> {
    let vba = vb_algebra(inst, "the split suite")?;
    let s = splitting_sign_table(&vba, 1)?;
    let rows = s.degrees.iter().zip(&s.signs).map(|(k, sg)| vec![json!(k), json!(sg)]).collect();
    report.table("splitting signs", &["degree", "sign"], rows);
    let bad = s.degrees.iter().zip(&s.signs).find(|(_, sg)| sg.is_none()).map(|(k, _)| *k);
    report.check(
        "split",
        bad.is_none(),
        match bad {
            Some(k) => format!("splitting does not intertwine the differentials in degree {k}"),
            None => "splitting intertwines the linear and cone differentials".into(),
        },
    );
    Ok(())
}

fn quasi_iso_suite(report: &mut Report, inst: &Instance) -> CmdResult<()> {
    let q = quasi_iso_check(&lav(inst, "the quasi-iso suite")?)?;
    let rows = (0..q.degrees.len())
        .map(|i| {
            vec![
                json!(q.degrees[i]),
                json!(q.full_dims[i]),
                json!(q.normalized_dims[i]),
                json!(q.induced_ranks[i]),
            ]
        })
        .collect();
    report.table("normalized inclusion", &["degree", "full", "normalized", "induced_rank"], rows);
    let witness = (0..q.degrees.len())
        .find(|&i| q.full_dims[i] != q.normalized_dims[i] || q.induced_ranks[i] != q.normalized_dims[i])
        .map(|i| format!("not an isomorphism in degree {}", q.degrees[i]));
    report.check(
        "quasi-iso",
        q.passed,
        witness.unwrap_or_else(|| "inclusion induces isomorphisms in degrees -1..1".into()),
    );
    Ok(())
}

pub fn vanest(report: &mut Report, inst: &Instance) -> CmdResult<()> {
    let r = van_est_report(&lav(inst, "the vanest suite")?)?;
    let rows = r.degrees.iter().zip(&r.signs).map(|(k, s)| vec![json!(k), json!(s)]).collect();
    report.table("sign table", &["degree", "sign"], rows);
    report.fact("chain_map", r.chain_map);
    let witness = if !r.scalar {
        let k = r.degrees.iter().zip(&r.signs).find(|(_, s)| s.is_none()).map(|(k, _)| *k);
        format!("not ±identity in degree {}", k.unwrap_or(0))
    } else if !r.chain_map {
        "does not commute with the differentials".into()
    } else {
        "chain map, ±identity in every degree".into()
    };
    report.check("vanest", r.passed, witness);
    Ok(())
}

fn weights_suite(report: &mut Report, inst: &Instance, seed: u64) -> CmdResult<()> {
    let vba = vb_algebra(inst, "the weights suite")?;
    let h = DeformationComplex::new(vba.kk())?;
    let total = vba.total_dim();
    let mut rows = Vec::new();
    let mut ok = true;
    let mut witness = None;
    for case in 0..CASES {
        let arity = (case as usize) % (total.min(4) + 1);
        let c = random::multiderivation(&mut random::rng(seed.wrapping_add(case)), total, arity, 2, 0.5);
        let weights = vba.weights_present(&c)?;
        let dec = vba.weight_decompose(&c)?;
        let bound = weights.iter().all(|&q| q >= -1) && dec.sum() == c;
        let commutes = vba.linearize(&h.differential(&c)?)? == h.differential(&vba.linearize(&c)?)?;
        if !(bound && commutes) && witness.is_none() {
            witness = Some(format!("case {case}, arity {arity}"));
        }
        ok &= bound && commutes;
        rows.push(vec![json!(case), json!(arity), json!(weights), json!(commutes)]);
    }
    report.table("multiderivations", &["case", "arity", "weights", "commutes"], rows);
    report.check(
        "weights",
        ok,
        witness.unwrap_or_else(|| format!("weights ≥ -1 and linearization commutes with δ on {CASES} cases")),
    );
    Ok(())
}

pub fn check(report: &mut Report, inst: &Instance, suite: Suite, seed: u64) -> CmdResult<()> {
    report.fact("suite", suite.name());
    match suite {
        Suite::Mc => mc_suite(report, inst, seed),
        Suite::Les => les(report, inst, 1),
        Suite::Split => split_suite(report, inst),
        Suite::QuasiIso => quasi_iso_suite(report, inst),
        Suite::Vanest => vanest(report, inst),
        Suite::Weights => weights_suite(report, inst, seed),
    }
}

/// `ξ` as a basis index, a basis name, or a comma-separated vector.
pub fn parse_xi(l: &LieAlgebra, xi: &str) -> CmdResult<Vec<Rational>> {
    let n = l.dim();
    let text = xi.trim().trim_start_matches('[').trim_end_matches(']');
    if text.contains(',') {
        let v = text.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
        if v.len() != n {
            return Err(Failure {
                code: 1,
                message: format!("xi has {} entries, the algebra has dimension {n}", v.len()),
            });
        }
        return Ok(v);
    }
    let index = match text.parse::<usize>() {
        Ok(i) => Some(i),
        Err(_) => l.basis_index(text),
    };
    match index {
        Some(i) if i < n => Ok((0..n).map(|j| int(i64::from(i == j))).collect()),
        _ => Err(Failure {
            code: 1,
            message: format!("xi {xi:?} names no basis vector of a dimension-{n} algebra"),
        }),
    }
}

/// Absolute tolerance on the endpoint error.
const GAUGE_TOL: f64 = 1e-8;

pub fn gauge(report: &mut Report, inst: &Instance, xi: &str, eps: f64, steps: usize) -> CmdResult<()> {
    let l = match inst {
        Instance::LieAlgebra(l) => l,
        _ => return Err(incompatible("gauge", inst.kind())),
    };
    let x = parse_xi(l, xi)?;
    let ad = l.ad_vector(&x);
    let h = DeformationComplex::new(l)?;
    let delta = Multiderivation::from_matrix(&ad)?;
    let flow = gauge_flow(&h, &delta, eps, steps)?;
    let oracle = conjugation_oracle(&h, &delta, eps)?;
    let err = max_abs_diff(&flow.endpoint, &oracle);
    report.fact("xi", json!(x.iter().map(format_rational).collect::<Vec<_>>()));
    report.fact("eps", eps);
    report.fact("steps", steps);
    report.fact("max_abs_error", err);
    report.fact("max_mc_residual", flow.max_mc_residual);
    report.check(
        "gauge",
        err < GAUGE_TOL,
        format!("endpoint error {err:.3e} against the conjugation oracle (tolerance {GAUGE_TOL:e})"),
    );
    Ok(())
}

fn parse_caps(caps: &[usize], want: usize, default: usize) -> Vec<usize> {
    (0..want).map(|i| caps.get(i).or(caps.first()).copied().unwrap_or(default)).collect()
}

/// Generates an instance; `caps` is `[n]`, `[n, m]` or `[m, p]` by family.
pub fn random_instance(family: Family, seed: u64, caps: &[usize], max_dim: usize) -> CmdResult<InstanceFile> {
    let mut g = random::rng(seed);
    let (inst, tag) = match family {
        Family::CatalogLie => {
            let c = parse_caps(caps, 1, 3);
            (Instance::LieAlgebra(random::catalog_lie(&mut g, c[0])?), "catalog_lie")
        }
        Family::Vb => {
            let c = parse_caps(caps, 2, 2);
            (Instance::VbAlgebra(random::catalog_representation(&mut g, c[0], c[1])?), "vb")
        }
        Family::La | Family::Twovect => {
            let c = parse_caps(caps, 2, 3);
            let tag = if family == Family::La { "la" } else { "twovect" };
            (Instance::LaVectorSpace(random::la_vector_space(&mut g, c[0], c[1])?), tag)
        }
    };
    let cap_sum: usize = match family {
        Family::CatalogLie => parse_caps(caps, 1, 3)[0],
        Family::Vb => parse_caps(caps, 2, 2).iter().sum(),
        _ => parse_caps(caps, 2, 3).iter().sum(),
    };
    if cap_sum > max_dim {
        return Err(Failure {
            code: 1,
            message: format!("caps allow ambient dimension {cap_sum}, above the cap {max_dim}"),
        });
    }
    let file = InstanceFile::new(format!("{tag}_seed{seed}"), Some(seed), &inst);
    // Generated files must pass the same validation as hand-written ones.
    file.validate(max_dim)?;
    Ok(file)
}
