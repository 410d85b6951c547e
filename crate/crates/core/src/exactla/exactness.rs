//! Exactness of a finite sequence of linear maps.

use serde::Serialize;

use super::matrix::RationalMatrix;
use crate::error::{Error, Result};

/// `V_0 → V_1 → … → V_r`, padded by zero spaces on both ends.
#[derive(Clone, Debug)]
pub struct LinearSequence {
    pub dims: Vec<usize>,
    /// `maps[i] : V_i → V_{i+1}`.
    pub maps: Vec<RationalMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeReport {
    pub node: usize,
    pub dim: usize,
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub composes_to_zero: bool,
    pub exact: bool,
    /// `dim ker − dim im`, meaningful when the composite vanishes.
    pub defect: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub nodes: Vec<NodeReport>,
    pub all_exact: bool,
}

impl LinearSequence {
    pub fn new(dims: Vec<usize>, maps: Vec<RationalMatrix>) -> Result<Self> {
        if maps.len() + 1 != dims.len() && !(dims.is_empty() && maps.is_empty()) {
            return Err(Error::ShapeMismatch(format!(
                "{} nodes need {} maps, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                maps.len()
            )));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.shape() != (dims[i + 1], dims[i]) {
                return Err(Error::ShapeMismatch(format!(
                    "map {i} is {:?}, expected {:?}",
                    m.shape(),
                    (dims[i + 1], dims[i])
                )));
            }
        }
        Ok(Self { dims, maps })
    }

    fn incoming(&self, i: usize) -> RationalMatrix {
        if i == 0 {
            RationalMatrix::zeros(self.dims[0], 0)
        } else {
            self.maps[i - 1].clone()
        }
    }

    fn outgoing(&self, i: usize) -> RationalMatrix {
        if i < self.maps.len() {
            self.maps[i].clone()
        } else {
            RationalMatrix::zeros(0, self.dims[i])
        }
    }
}

/// Checks `im(incoming) = ker(outgoing)` at every node by rank counts.
pub fn exactness_check(seq: &LinearSequence) -> ExactnessReport {
    let nodes: Vec<NodeReport> = (0..seq.dims.len())
        .map(|i| {
            let a = seq.incoming(i);
            let b = seq.outgoing(i);
            let composes_to_zero = b.dot(&a).is_zero();
            let kernel_dim = seq.dims[i] - b.rank();
            let image_dim = a.rank();
            NodeReport {
                node: i,
                dim: seq.dims[i],
                kernel_dim,
                image_dim,
                composes_to_zero,
                exact: composes_to_zero && kernel_dim == image_dim,
                defect: kernel_dim as i64 - image_dim as i64,
            }
        })
        .collect();
    let all_exact = nodes.iter().all(|n| n.exact);
    ExactnessReport { nodes, all_exact }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_exact() {
        let seq = LinearSequence::new(vec![2, 2], vec![RationalMatrix::identity(2)]).unwrap();
        assert!(exactness_check(&seq).all_exact);
    }

    #[test]
    fn lone_space_has_defect() {
        let seq = LinearSequence::new(vec![3], vec![]).unwrap();
        let r = exactness_check(&seq);
        assert!(!r.all_exact);
        assert_eq!(r.nodes[0].defect, 3);
    }

    #[test]
    fn shape_mismatch() {
        assert!(LinearSequence::new(vec![2, 3], vec![RationalMatrix::identity(2)]).is_err());
    }
}
