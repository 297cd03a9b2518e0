//! Trivial extensions `Triv(A) = A ⊕ DA` and the canonical embedding of
//! `A`-modules into `Triv(A)`-modules.

use std::sync::Arc;

use crate::algebra::{AlgebraTable, QuiverAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, SparseVec};
use crate::modules::Representation;

/// `Triv(A)` with basis `b_0..b_{d-1}, b_0*..b_{d-1}*`, multiplication
/// `(a,f)(b,g) = (ab, ag + fb)` and `(x·φ·y)(z) = φ(yzx)`.
pub fn trivial_extension<F: Field>(a: &AlgebraTable<F>) -> Result<AlgebraTable<F>> {
    let d = a.dim();
    let mut mul: Vec<Vec<SparseVec<F>>> = vec![vec![Vec::new(); 2 * d]; 2 * d];
    for i in 0..d {
        for k in 0..d {
            // b_k b_i = Σ c^j b_j puts c^j b_k* into b_i · b_j*.
            for (j, c) in a.mul_basis(k, i) {
                mul[i][d + j].push((d + k, c.clone()));
            }
            // b_i b_k = Σ c^j b_j puts c^j b_k* into b_j* · b_i.
            for (j, c) in a.mul_basis(i, k) {
                mul[d + j][i].push((d + k, c.clone()));
            }
            mul[i][k] = a.mul_basis(i, k).clone();
        }
    }
    for row in mul.iter_mut() {
        for v in row.iter_mut() {
            v.sort_by_key(|(k, _)| *k);
        }
    }
    let mut labels = a.labels().to_vec();
    labels.extend(a.labels().iter().map(|l| format!("D({l})")));
    let grading = Some((0..2 * d).map(|k| usize::from(k >= d)).collect());
    AlgebraTable::new(labels, mul, a.idempotents().to_vec(), a.vertices().to_vec(), a.has_structural_radical(), grading)
}

/// The functional `(a, f) ↦ f(1)` giving the form `((a,f),(b,g)) ↦ f(b) + g(a)`.
pub fn triv_form<F: Field>(a: &AlgebraTable<F>) -> Vec<F> {
    let d = a.dim();
    let mut t = vec![F::zero(); 2 * d];
    for (k, c) in a.unit().into_iter().enumerate() {
        t[d + k] = c;
    }
    t
}

/// The injective `D(A e_v)` over the path algebra `A = KQ` (no relations),
/// with basis the duals of the paths ending at `v`.
pub fn injective_kq<F: Field>(kq: Arc<QuiverAlgebra<F>>, v: i64) -> Result<Representation<F>> {
    if !kq.relations().is_empty() {
        return Err(Error::InvalidModule("injective_kq expects a path algebra without relations".into()));
    }
    let vi = kq.vertex_position(v).ok_or(Error::UnknownVertex(v))?;
    let t = kq.table();
    let q = kq.quiver().clone();
    let ending: Vec<usize> = (0..t.dim()).filter(|&k| t.block(k).1 == vi).collect();
    let n = kq.num_vertices();
    let mut dims = vec![0; n];
    let mut local = vec![usize::MAX; t.dim()];
    for &k in &ending {
        let s = t.block(k).0;
        local[k] = dims[s];
        dims[s] += 1;
    }
    let words = kq.words();
    let mut entries = Vec::new();
    // (δ_q · a) = δ_{q'} when q = a q'.
    for &k in &ending {
        let w = &words[k];
        if let Some((&first, rest)) = w.split_first() {
            let target = if rest.is_empty() {
                t.idempotents()[vi]
            } else {
                *ending.iter().find(|&&j| words[j] == rest).expect("suffix is a path")
            };
            entries.push((q.arrows()[first].id.clone(), local[target], local[k], F::one()));
        }
    }
    let refs: Vec<(&str, usize, usize, F)> = entries.iter().map(|(a, r, c, x)| (a.as_str(), *r, *c, x.clone())).collect();
    Representation::from_entries(kq, dims, &refs)
}

/// Regards an `A`-module as a `Triv(A)`-module on which `DA` acts by zero.
/// Arrows of `triv` missing from the module's quiver act by zero.
pub fn inflate<F: Field>(m: &Representation<F>, triv: Arc<QuiverAlgebra<F>>) -> Result<Representation<F>> {
    let small = m.algebra().quiver();
    let big = triv.quiver();
    if small.vertices() != big.vertices() {
        return Err(Error::AlgebraMismatch);
    }
    let maps = big
        .arrows()
        .iter()
        .map(|a| match small.arrow_index(&a.id) {
            Some(i) => m.maps()[i].clone(),
            None => {
                let s = big.vertex_index(a.src).expect("source");
                let t = big.vertex_index(a.tgt).expect("target");
                Matrix::zeros(m.dims()[t], m.dims()[s])
            }
        })
        .collect();
    Representation::new(triv, m.dims().to_vec(), maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symmetric::is_symmetrizing_form;
    use crate::constructions::families::{path_algebra, triv_kq};
    use crate::field::Q;
    use crate::graphs::Quiver;
    use crate::modules::{hom_dim, is_indecomposable};

    fn a3() -> Quiver {
        Quiver::from_triples(vec![1, 2, 3], &[("a", 1, 2), ("b", 2, 3)]).unwrap()
    }

    #[test]
    fn triv_table_is_symmetric_with_witness() {
        let kq = path_algebra::<Q>(&a3()).unwrap();
        let t = trivial_extension(kq.table()).unwrap();
        assert_eq!(t.dim(), 12);
        t.check_associativity().unwrap();
        assert!(is_symmetrizing_form(&t, &triv_form(kq.table())));
        assert_eq!(t.loewy_length().unwrap(), 4);
    }

    #[test]
    fn injectives_inflate_to_indecomposables() {
        let kq = Arc::new(path_algebra::<Q>(&a3()).unwrap());
        let tr = Arc::new(triv_kq::<Q>(&a3()).unwrap());
        for v in 1..=3 {
            let i = injective_kq(kq.clone(), v).unwrap();
            assert_eq!(i.socle_dims()[(v - 1) as usize], 1);
            let big = inflate(&i, tr.clone()).unwrap();
            assert!(is_indecomposable(&big).unwrap().indecomposable);
            assert_eq!(hom_dim(&big, &big).unwrap(), hom_dim(&i, &i).unwrap());
        }
    }
}
