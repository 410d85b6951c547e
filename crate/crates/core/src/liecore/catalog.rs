//! Built-in Lie algebras and representations with known data.

use super::algebra::LieAlgebra;
use super::representation::Representation;
use crate::error::{Error, Result};
use crate::exactla::{int, RationalMatrix};

fn named(l: LieAlgebra, names: &[&str]) -> LieAlgebra {
    l.with_names(names.iter().map(|s| s.to_string()).collect())
}

/// Basis `(e, f, h)` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2() -> LieAlgebra {
    let l = LieAlgebra::from_brackets(
        3,
        &[(0, 1, 2, int(1)), (0, 2, 0, int(-2)), (1, 2, 1, int(2))],
    )
    .expect("sl2 is skew");
    named(l, &["e", "f", "h"])
}

/// `[x, y] = z`, `z` central.
pub fn heisenberg3() -> LieAlgebra {
    let l = LieAlgebra::from_brackets(3, &[(0, 1, 2, int(1))]).expect("skew");
    named(l, &["x", "y", "z"])
}

/// `[x, y] = y`.
pub fn aff1() -> LieAlgebra {
    let l = LieAlgebra::from_brackets(2, &[(0, 1, 1, int(1))]).expect("skew");
    named(l, &["x", "y"])
}

/// `[x_0,x_1] = x_2` and cyclic.
pub fn so3() -> LieAlgebra {
    let l = LieAlgebra::from_brackets(
        3,
        &[(0, 1, 2, int(1)), (1, 2, 0, int(1)), (0, 2, 1, int(-1))],
    )
    .expect("skew");
    named(l, &["x0", "x1", "x2"])
}

pub fn abelian(n: usize) -> LieAlgebra {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    LieAlgebra::abelian(n).with_names(names)
}

/// Skew but not Lie: `[e1,e2] = e1`, `[e2,e3] = e2`, `[e1,e3] = 0`.
pub fn non_jacobi3() -> LieAlgebra {
    LieAlgebra::from_brackets(3, &[(0, 1, 0, int(1)), (1, 2, 1, int(1))]).expect("skew")
}

/// Names accepted by [`by_name`]; `abelian-n` takes any `n`.
pub const NAMES: &[&str] = &["abelian-n", "heisenberg3", "aff1", "sl2", "so3"];

pub fn by_name(name: &str) -> Result<LieAlgebra> {
    match name {
        "sl2" => Ok(sl2()),
        "heisenberg3" => Ok(heisenberg3()),
        "aff1" => Ok(aff1()),
        "so3" => Ok(so3()),
        _ => name
            .strip_prefix("abelian-")
            .and_then(|n| n.parse().ok())
            .map(abelian)
            .ok_or_else(|| Error::Unsupported(format!("unknown catalog algebra {name:?}"))),
    }
}

/// sl2 acting on `Q²` by `e = E_01`, `f = E_10`, `h = diag(1, -1)`.
pub fn sl2_standard() -> Representation {
    let e = RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]);
    let f = RationalMatrix::from_i64(&[&[0, 0], &[1, 0]]);
    let h = RationalMatrix::from_i64(&[&[1, 0], &[0, -1]]);
    Representation::new(sl2(), 2, vec![e, f, h]).expect("standard rep is flat")
}

/// aff(1) on `Q` with `x` acting by 1 and `y` by 0.
pub fn aff1_line() -> Representation {
    Representation::new(
        aff1(),
        1,
        vec![RationalMatrix::from_i64(&[&[1]]), RationalMatrix::from_i64(&[&[0]])],
    )
    .expect("flat")
}

/// Heisenberg on `Q²` with `x ↦ E_01`, `y, z ↦ 0`.
pub fn heisenberg_plane() -> Representation {
    Representation::new(
        heisenberg3(),
        2,
        vec![
            RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]),
            RationalMatrix::zeros(2, 2),
            RationalMatrix::zeros(2, 2),
        ],
    )
    .expect("flat")
}

/// Abelian `Q^n` acting diagonally on `Q^m`, generator `i` by `diag(w_i)`.
pub fn abelian_diagonal(n: usize, weights: &[Vec<i64>]) -> Result<Representation> {
    let m = weights.first().map_or(0, Vec::len);
    let action = weights
        .iter()
        .map(|w| {
            let mut d = RationalMatrix::zeros(m, m);
            for (i, x) in w.iter().enumerate() {
                d[(i, i)] = int(*x);
            }
            d
        })
        .collect();
    Representation::new(abelian(n), m, action)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_members_are_lie() {
        for name in ["sl2", "heisenberg3", "aff1", "so3", "abelian-4"] {
            assert!(by_name(name).unwrap().is_lie(), "{name}");
        }
        assert!(by_name("e8").is_err());
    }

    #[test]
    fn sl2_relations() {
        let l = sl2();
        assert_eq!(l.bracket_basis(0, 1), vec![int(0), int(0), int(1)]);
        assert_eq!(l.bracket_basis(2, 0), vec![int(2), int(0), int(0)]);
        assert_eq!(l.bracket_basis(2, 1), vec![int(0), int(-2), int(0)]);
    }

    #[test]
    fn bundled_representations_are_flat() {
        sl2_standard();
        aff1_line();
        heisenberg_plane();
        abelian_diagonal(2, &[vec![1, 0], vec![0, 2]]).unwrap();
    }
}
