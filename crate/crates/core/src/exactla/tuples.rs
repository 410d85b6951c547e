//! Exterior-algebra index combinatorics: wedge bases and unshuffles.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A strictly increasing list of basis indices, standing for the wedge
/// monomial `x_{i_1} ∧ … ∧ x_{i_k}`.
pub type IndexTuple = Vec<usize>;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All `k`-element tuples from `0..n`, in lexicographic order.
pub fn enumerate_tuples(n: usize, k: usize) -> Result<Vec<IndexTuple>> {
    if k > n {
        return Err(Error::ArityOutOfRange { arity: k, dim: n });
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Advance the rightmost index that still has room.
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    Ok(out)
}

/// The lexicographic wedge basis of `Λᵏ` on an `n`-dimensional space with a
/// reverse lookup from tuple to position.
#[derive(Clone, Debug)]
pub struct WedgeBasis {
    n: usize,
    k: usize,
    tuples: Vec<IndexTuple>,
    position: HashMap<IndexTuple, usize>,
}

impl WedgeBasis {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let tuples = enumerate_tuples(n, k)?;
        let position = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Ok(Self {
            n,
            k,
            tuples,
            position,
        })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[IndexTuple] {
        &self.tuples
    }

    pub fn get(&self, i: usize) -> &IndexTuple {
        &self.tuples[i]
    }

    /// Position of a sorted tuple.
    pub fn position(&self, t: &[usize]) -> Option<usize> {
        self.position.get(t).copied()
    }

    /// Position and sorting sign of an arbitrary tuple; `None` on repeats.
    pub fn locate(&self, t: &[usize]) -> Option<(usize, i64)> {
        let (sorted, sign) = sort_with_sign(t)?;
        Some((self.position(&sorted)?, sign))
    }
}

/// Sorts `t` and returns the sign of the sorting permutation, or `None` if
/// an index repeats (the wedge monomial vanishes).
pub fn sort_with_sign(t: &[usize]) -> Option<(IndexTuple, i64)> {
    let mut v = t.to_vec();
    let mut sign = 1;
    // Insertion sort counts transpositions.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Sign of a permutation of `0..len` given as its image vector.
pub fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// An `(l, m)`-unshuffle: a permutation `τ` of `0..l+m` increasing on the
/// first `l` and on the last `m` positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unshuffle {
    pub perm: Vec<usize>,
    pub sign: i64,
}

impl Unshuffle {
    pub fn head(&self, l: usize) -> &[usize] {
        &self.perm[..l]
    }

    pub fn tail(&self, l: usize) -> &[usize] {
        &self.perm[l..]
    }
}

/// All `(l, m)`-unshuffles in lexicographic order of the permutation vector.
pub fn unshuffles(l: usize, m: usize) -> Vec<Unshuffle> {
    let n = l + m;
    enumerate_tuples(n, l)
        .expect("l <= l + m")
        .into_iter()
        .map(|head| {
            let mut perm = head.clone();
            perm.extend((0..n).filter(|i| !head.contains(i)));
            let sign = permutation_sign(&perm);
            Unshuffle { perm, sign }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_three_choose_two() {
        assert_eq!(
            enumerate_tuples(3, 2).unwrap(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(enumerate_tuples(3, 0).unwrap(), vec![Vec::<usize>::new()]);
        assert_eq!(enumerate_tuples(0, 0).unwrap().len(), 1);
        assert!(matches!(
            enumerate_tuples(2, 3),
            Err(Error::ArityOutOfRange { arity: 3, dim: 2 })
        ));
    }

    #[test]
    fn tuple_counts_are_binomial() {
        for n in 0..7 {
            for k in 0..=n {
                assert_eq!(enumerate_tuples(n, k).unwrap().len(), binomial(n, k));
            }
        }
    }

    #[test]
    fn unshuffle_small_cases() {
        let u = unshuffles(1, 1);
        assert_eq!(u.len(), 2);
        assert_eq!((u[0].perm.clone(), u[0].sign), (vec![0, 1], 1));
        assert_eq!((u[1].perm.clone(), u[1].sign), (vec![1, 0], -1));

        // Filtered from all of S3 by monotonicity on both blocks.
        let u = unshuffles(2, 1);
        let perms: Vec<_> = u.iter().map(|s| (s.perm.clone(), s.sign)).collect();
        assert_eq!(
            perms,
            vec![(vec![0, 1, 2], 1), (vec![0, 2, 1], -1), (vec![1, 2, 0], 1)]
        );
        assert_eq!(unshuffles(0, 3).len(), 1);
        assert_eq!(unshuffles(3, 0).len(), 1);
    }

    #[test]
    fn sorting_sign() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], -1)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }

    #[test]
    fn wedge_basis_lookup() {
        let b = WedgeBasis::new(4, 2).unwrap();
        assert_eq!(b.len(), 6);
        assert_eq!(b.locate(&[3, 1]), Some((b.position(&[1, 3]).unwrap(), -1)));
        assert_eq!(b.locate(&[2, 2]), None);
    }
}
