//! JSON instance files.
//!
//! ```json
//! {"kind": "lie_algebra", "name": "aff1", "dim": 2, "basis": ["x", "y"],
//!  "brackets": [[0, 1, 1, "1"]]}
//! ```
//!
//! Brackets are sparse triples `(i, j, k, value)` with `i < j`, meaning
//! `[x_i, x_j] ∋ value · x_k`. Scalars are strings `"p"` or `"p/q"`; plain
//! integers are accepted on input. Representations and VB-algebras carry an
//! `algebra` block plus `module_dim` and one `action` matrix per generator;
//! LA-vector spaces carry `core_dim`, `side_dim` and the `partial` matrix
//! (`side_dim` rows). Output is pretty-printed with sorted keys.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{format_rational, parse_rational, Rational, RationalMatrix};
use crate::liecore::{LieAlgebra, Representation};
use crate::twovect::LAVectorSpace;
use crate::vbalg::VBAlgebra;

/// Default cap on the ambient dimension of parsed instances.
pub const DEFAULT_MAX_DIM: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Text(String),
    Int(i64),
}

impl Scalar {
    fn value(&self) -> Result<Rational> {
        match self {
            Self::Text(s) => parse_rational(s),
            Self::Int(n) => Ok(crate::exactla::int(*n)),
        }
    }

    fn of(x: &Rational) -> Self {
        Self::Text(format_rational(x))
    }
}

pub type MatrixData = Vec<Vec<Scalar>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraData {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<(usize, usize, usize, Scalar)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationData {
    pub algebra: AlgebraData,
    pub module_dim: usize,
    pub action: Vec<MatrixData>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaVectorSpaceData {
    pub core_dim: usize,
    pub side_dim: usize,
    pub partial: MatrixData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    LieAlgebra(AlgebraData),
    Representation(RepresentationData),
    VbAlgebra(RepresentationData),
    LaVectorSpace(LaVectorSpaceData),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub name: String,
    /// Seed of the generator run that produced the file, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub payload: Payload,
}

/// A validated library object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    LieAlgebra(LieAlgebra),
    Representation(Representation),
    VbAlgebra(Representation),
    LaVectorSpace(LAVectorSpace),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::LieAlgebra(_) => "lie_algebra",
            Self::Representation(_) => "representation",
            Self::VbAlgebra(_) => "vb_algebra",
            Self::LaVectorSpace(_) => "la_vector_space",
        }
    }

    /// Dimension checked against the cap: `dim 𝔤`, `dim 𝔤 + dim C`, or
    /// `dim C + dim V₀`.
    pub fn ambient_dim(&self) -> usize {
        match self {
            Self::LieAlgebra(l) => l.dim(),
            Self::Representation(r) | Self::VbAlgebra(r) => r.algebra().dim() + r.dim(),
            Self::LaVectorSpace(l) => l.core_dim() + l.side_dim(),
        }
    }

    pub fn vb_algebra(&self) -> Option<VBAlgebra> {
        match self {
            Self::VbAlgebra(r) => Some(VBAlgebra::new(r.clone())),
            _ => None,
        }
    }
}

fn matrix_from(data: &MatrixData, rows: usize, cols: usize, what: &str) -> Result<RationalMatrix> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(Error::Validation(format!("{what} must be {rows}x{cols}")));
    }
    let entries = data
        .iter()
        .flatten()
        .map(Scalar::value)
        .collect::<Result<Vec<_>>>()?;
    RationalMatrix::from_vec(rows, cols, entries)
}

fn matrix_to(m: &RationalMatrix) -> MatrixData {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(Scalar::of).collect())
        .collect()
}

fn algebra_from(a: &AlgebraData) -> Result<LieAlgebra> {
    let brackets = a
        .brackets
        .iter()
        .map(|(i, j, k, v)| Ok((*i, *j, *k, v.value()?)))
        .collect::<Result<Vec<_>>>()?;
    let l = LieAlgebra::from_brackets(a.dim, &brackets)?;
    l.validate()?;
    match &a.basis {
        Some(names) if names.len() != a.dim => Err(Error::Validation(format!(
            "{} basis names for dimension {}",
            names.len(),
            a.dim
        ))),
        Some(names) => Ok(l.with_names(names.clone())),
        None => Ok(l),
    }
}

fn algebra_to(l: &LieAlgebra) -> AlgebraData {
    let n = l.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let c = l.c(i, j, k);
                if !num_traits::Zero::is_zero(c) {
                    brackets.push((i, j, k, Scalar::of(c)));
                }
            }
        }
    }
    AlgebraData {
        dim: n,
        basis: l.names().map(<[String]>::to_vec),
        brackets,
    }
}

fn representation_from(r: &RepresentationData) -> Result<Representation> {
    let algebra = algebra_from(&r.algebra)?;
    if r.action.len() != algebra.dim() {
        return Err(Error::Validation(format!(
            "{} action matrices for an algebra of dimension {}",
            r.action.len(),
            algebra.dim()
        )));
    }
    let action = r
        .action
        .iter()
        .enumerate()
        .map(|(a, m)| matrix_from(m, r.module_dim, r.module_dim, &format!("action matrix {a}")))
        .collect::<Result<Vec<_>>>()?;
    Representation::new(algebra, r.module_dim, action)
}

fn representation_to(r: &Representation) -> RepresentationData {
    RepresentationData {
        algebra: algebra_to(r.algebra()),
        module_dim: r.dim(),
        action: r.actions().iter().map(matrix_to).collect(),
    }
}

impl InstanceFile {
    pub fn new(name: impl Into<String>, seed: Option<u64>, instance: &Instance) -> Self {
        let payload = match instance {
            Instance::LieAlgebra(l) => Payload::LieAlgebra(algebra_to(l)),
            Instance::Representation(r) => Payload::Representation(representation_to(r)),
            Instance::VbAlgebra(r) => Payload::VbAlgebra(representation_to(r)),
            Instance::LaVectorSpace(l) => Payload::LaVectorSpace(LaVectorSpaceData {
                core_dim: l.core_dim(),
                side_dim: l.side_dim(),
                partial: matrix_to(l.partial()),
            }),
        };
        Self {
            name: name.into(),
            seed,
            payload,
        }
    }

    /// Syntax only; see [`InstanceFile::validate`].
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Builds and checks the library object: skewness, Jacobi, flatness and
    /// shapes, then the ambient-dimension cap.
    pub fn validate(&self, max_dim: usize) -> Result<Instance> {
        let inst = match &self.payload {
            Payload::LieAlgebra(a) => Instance::LieAlgebra(algebra_from(a)?),
            Payload::Representation(r) => Instance::Representation(representation_from(r)?),
            Payload::VbAlgebra(r) => Instance::VbAlgebra(representation_from(r)?),
            Payload::LaVectorSpace(l) => Instance::LaVectorSpace(LAVectorSpace::new(matrix_from(
                &l.partial,
                l.side_dim,
                l.core_dim,
                "partial",
            )?)),
        };
        if inst.ambient_dim() > max_dim {
            return Err(Error::Validation(format!(
                "ambient dimension {} exceeds the cap {max_dim}",
                inst.ambient_dim()
            )));
        }
        Ok(inst)
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("plain data");
        let mut s = serde_json::to_string_pretty(&value).expect("plain data");
        s.push('\n');
        s
    }
}

/// Parse and validate in one step.
pub fn parse_instance(text: &str, max_dim: usize) -> Result<(InstanceFile, Instance)> {
    let file = InstanceFile::parse(text)?;
    let inst = file.validate(max_dim)?;
    Ok((file, inst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::catalog;

    fn round_trip(inst: Instance) {
        let text = InstanceFile::new("t", Some(3), &inst).to_json();
        let (file, back) = parse_instance(&text, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(back, inst);
        assert_eq!(file.seed, Some(3));
        assert_eq!(file.to_json(), text);
    }

    #[test]
    fn round_trips() {
        round_trip(Instance::LieAlgebra(catalog::sl2()));
        round_trip(Instance::LieAlgebra(catalog::so3()));
        round_trip(Instance::LieAlgebra(LieAlgebra::abelian(2)));
        round_trip(Instance::Representation(catalog::heisenberg_plane()));
        round_trip(Instance::VbAlgebra(catalog::sl2_standard()));
        round_trip(Instance::LaVectorSpace(LAVectorSpace::new(RationalMatrix::from_i64(&[&[1, 0], &[0, 0]]))));
    }

    #[test]
    fn fractions_survive() {
        let l = catalog::aff1().transform(&RationalMatrix::from_i64(&[&[3, 0], &[0, 1]])).unwrap();
        round_trip(Instance::LieAlgebra(l));
    }

    #[test]
    fn diagonal_bracket_is_rejected() {
        let text = r#"{"kind": "lie_algebra", "name": "bad", "dim": 2, "brackets": [[0, 0, 1, "1"]]}"#;
        let err = parse_instance(text, 6).unwrap_err();
        assert_eq!(err.to_string(), "skewness at (0,0)");
    }

    #[test]
    fn jacobi_is_checked() {
        let file = InstanceFile::new("nj", None, &Instance::LieAlgebra(catalog::non_jacobi3()));
        assert!(matches!(file.validate(6), Err(Error::NotLie { .. })));
    }

    #[test]
    fn syntax_errors_are_parse_errors() {
        assert!(matches!(parse_instance("{", 6), Err(Error::Parse(_))));
        assert!(matches!(
            parse_instance(r#"{"kind": "lie_algebra", "name": "x", "dim": 1, "brackets": [], "#, 6),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_instance(r#"{"kind": "lie_algebra", "name": "x", "dim": 2, "brackets": [[0, 1, 0, "1/0"]]}"#, 6),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let file = InstanceFile::new("big", None, &Instance::LieAlgebra(catalog::abelian(7)));
        assert!(matches!(file.validate(6), Err(Error::Validation(_))));
        assert!(file.validate(7).is_ok());
    }

    #[test]
    fn integers_are_accepted() {
        let text = r#"{"kind": "la_vector_space", "name": "d", "core_dim": 1, "side_dim": 2, "partial": [[1], ["1/2"]]}"#;
        let (_, inst) = parse_instance(text, 6).unwrap();
        assert_eq!(inst.kind(), "la_vector_space");
    }
}
