//! `End_{Triv(KQ)}(Triv(KQ) ⊕ D(KQe_v))` against `Triv(KQ')/soc P_x`, where
//! `Q'` is `Q` with one new vertex `x` joined to `v`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{fingerprint, Fingerprint};
use crate::constructions::endo::gendo_algebra;
use crate::constructions::families::{path_algebra, triv_kq};
use crate::constructions::triv::{inflate, injective_kq};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{Arrow, Quiver};

#[derive(Clone, Debug, Serialize)]
pub struct CoextReport {
    pub vertex: i64,
    /// Label of the new vertex `x`.
    pub extension_vertex: i64,
    /// `(src, tgt)` of the new arrow.
    pub new_arrow: (i64, i64),
    pub gendo_dim: usize,
    pub extended_triv_dim: usize,
    pub gendo: Fingerprint,
    pub quotient: Fingerprint,
    pub pass: bool,
}

/// `Q` with a new vertex `max + 1` and an arrow `v → x`.
pub fn extend_quiver(q: &Quiver, v: i64) -> Result<(Quiver, i64)> {
    if q.vertex_index(v).is_none() {
        return Err(Error::UnknownVertex(v));
    }
    let x = q.vertices().iter().copied().max().unwrap_or(0) + 1;
    let mut id = "x".to_string();
    while q.arrow_index(&id).is_some() {
        id.push('\'');
    }
    let mut vertices = q.vertices().to_vec();
    vertices.push(x);
    let mut arrows = q.arrows().to_vec();
    arrows.push(Arrow { id, src: v, tgt: x });
    Ok((Quiver::new(vertices, arrows)?, x))
}

pub fn coext_vs_gendo_check<F: Field>(q: &Quiver, v: i64) -> Result<CoextReport> {
    if !q.is_acyclic() {
        return Err(Error::InvalidGraph("quiver must be acyclic".into()));
    }
    let kq = Arc::new(path_algebra::<F>(q)?);
    let triv = Arc::new(triv_kq::<F>(q)?);
    let injective = inflate(&injective_kq(kq, v)?, triv.clone())?;
    let gendo = gendo_algebra(triv, &[injective])?;

    let (q2, x) = extend_quiver(q, v)?;
    let extended = triv_kq::<F>(&q2)?;
    let quotient = extended.table().quotient_by_socle(x)?;

    let gendo_fp = fingerprint(&gendo.gendo.table)?;
    let quotient_fp = fingerprint(&quotient)?;
    let gendo_dim = gendo.gendo.table.dim();
    let extended_triv_dim = extended.table().dim();
    Ok(CoextReport {
        vertex: v,
        extension_vertex: x,
        new_arrow: (v, x),
        gendo_dim,
        extended_triv_dim,
        pass: gendo_fp == quotient_fp && gendo_dim + 1 == extended_triv_dim,
        gendo: gendo_fp,
        quotient: quotient_fp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::graphs::{orientations, MarkedGraph};

    fn all(edges: &[(i64, i64)]) -> Vec<Quiver> {
        let mut vs: Vec<i64> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vs.sort_unstable();
        vs.dedup();
        orientations(&MarkedGraph::new(vs, edges.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn every_orientation_of_a2_and_a3() {
        for q in all(&[(1, 2)]).into_iter().chain(all(&[(1, 2), (2, 3)])) {
            for &v in q.vertices() {
                let r = coext_vs_gendo_check::<Q>(&q, v).unwrap();
                assert!(r.pass, "{q:?} at {v}: {} vs {}", r.gendo, r.quotient);
            }
        }
    }

    #[test]
    fn d4_leaves() {
        for q in all(&[(1, 2), (2, 3), (2, 4)]) {
            for v in [1, 3, 4] {
                let r = coext_vs_gendo_check::<Q>(&q, v).unwrap();
                assert!(r.pass, "{q:?} at {v}: {} vs {}", r.gendo, r.quotient);
            }
        }
    }
}
