//! Isomorphism-invariant summaries of basic algebras.
//!
//! Two algebras with equal fingerprints have isomorphic Ext¹-quivers, the same
//! Cartan matrix under a compatible vertex bijection, the same dimension and
//! the same radical layers. This is weaker than isomorphism.

use std::fmt;

use serde::Serialize;

use crate::algebra::AlgebraTable;
use crate::error::Result;
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub vertices: usize,
    /// `ext1[i][j]` arrows `i → j`, after canonical vertex ordering.
    pub ext1: Vec<Vec<usize>>,
    pub cartan: Vec<Vec<usize>>,
    pub total_dim: usize,
    pub radical_layers: Vec<usize>,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim {} | layers {:?} | ext1 {:?} | cartan {:?}",
            self.total_dim, self.radical_layers, self.ext1, self.cartan
        )
    }
}

fn permuted(m: &[Vec<usize>], order: &[usize]) -> Vec<Vec<usize>> {
    order.iter().map(|&i| order.iter().map(|&j| m[i][j]).collect()).collect()
}

/// Next lexicographic permutation in place; `false` once wrapped around.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        v.reverse();
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Vertex order minimizing `(ext1, cartan)` lexicographically among orders
/// that sort vertices by a permutation-invariant key.
pub fn canonical_order(ext1: &[Vec<usize>], cartan: &[Vec<usize>]) -> Vec<usize> {
    let n = ext1.len();
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    let key = |i: usize| {
        (
            ext1[i][i],
            cartan[i][i],
            sorted(ext1[i].clone()),
            sorted((0..n).map(|j| ext1[j][i]).collect()),
            sorted(cartan[i].clone()),
            sorted((0..n).map(|j| cartan[j][i]).collect()),
        )
    };
    let keys: Vec<_> = (0..n).map(key).collect();
    let mut base: Vec<usize> = (0..n).collect();
    base.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &base {
        match groups.last_mut() {
            Some(g) if keys[g[0]] == keys[v] => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut state: Vec<Vec<usize>> = groups.iter().map(|g| (0..g.len()).collect()).collect();
    let mut best: Option<(Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<usize>)> = None;
    loop {
        let order: Vec<usize> = groups.iter().zip(&state).flat_map(|(g, s)| s.iter().map(move |&k| g[k])).collect();
        let cand = (permuted(ext1, &order), permuted(cartan, &order));
        if best.as_ref().is_none_or(|b| (&cand.0, &cand.1) < (&b.0, &b.1)) {
            best = Some((cand.0, cand.1, order));
        }
        // Odometer over the per-group permutations.
        let mut advanced = false;
        for s in state.iter_mut().rev() {
            if next_permutation(s) {
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    best.expect("at least one order").2
}

pub fn fingerprint<F: Field>(a: &AlgebraTable<F>) -> Result<Fingerprint> {
    let ext1 = a.ext1_matrix()?;
    let cartan = a.cartan_matrix();
    let order = canonical_order(&ext1, &cartan);
    Ok(Fingerprint {
        vertices: a.num_vertices(),
        ext1: permuted(&ext1, &order),
        cartan: permuted(&cartan, &order),
        total_dim: a.dim(),
        radical_layers: a.radical_layer_dims()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presentation::{algebra_from_presentation, Presentation};
    use crate::field::Q;
    use crate::graphs::Quiver;
    use proptest::prelude::*;

    fn a3() -> AlgebraTable<Q> {
        let q = Quiver::from_triples(vec![1, 2, 3], &[("a", 1, 2), ("b", 3, 2)]).unwrap();
        algebra_from_presentation(&Presentation::new(q, vec![], 3).unwrap()).unwrap().into_table()
    }

    #[test]
    fn permutations_enumerate() {
        let mut v = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(v, vec![0, 1, 2]);
    }

    #[test]
    fn relabelled_vertices_agree() {
        let a = a3();
        let b = a.reorder_vertices(&[2, 0, 1]).unwrap();
        assert_eq!(fingerprint(&a).unwrap(), fingerprint(&b).unwrap());
        assert_eq!(fingerprint(&a).unwrap().radical_layers, vec![3, 2]);
    }

    proptest! {
        #[test]
        fn basis_permutation_invariance(seed in any::<u64>()) {
            let a = a3();
            let mut perm: Vec<usize> = (0..a.dim()).collect();
            let mut s = seed;
            for i in (1..perm.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let b = a.permute_basis(&perm).unwrap();
            b.validate().unwrap();
            prop_assert_eq!(fingerprint(&a).unwrap(), fingerprint(&b).unwrap());
        }
    }
}
