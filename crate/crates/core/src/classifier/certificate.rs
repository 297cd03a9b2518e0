//! Representation-infiniteness certificates: a corner `eAe`, its quotient by
//! `J²`, and a non-Dynkin component of the separated quiver of that quotient.

use serde::Serialize;

use crate::algebra::AlgebraTable;
use crate::error::Result;
use crate::field::Field;
use crate::graphs::{recognize, separated_quiver, GraphClass, Quiver};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfinitenessCertificate {
    /// Vertex labels whose idempotents sum to the cut `e`.
    pub cut: Vec<i64>,
    /// Ext¹-quiver of `eAe / J²` as `(src, tgt)` pairs.
    pub corner_arrows: Vec<(i64, i64)>,
    /// Vertices of the offending component; primed copies carry a trailing `'`.
    pub component: Vec<String>,
    pub component_edges: Vec<(String, String)>,
    /// Recognizer verdict for the component, never Dynkin.
    pub class: String,
}

fn node(q: &Quiver, k: i64) -> String {
    let n = q.vertices().len() as i64;
    if k <= n {
        q.vertices()[(k - 1) as usize].to_string()
    } else {
        format!("{}'", q.vertices()[(k - n - 1) as usize])
    }
}

/// Searches the separated quiver of `(eAe)/J²` for a non-Dynkin component.
/// `None` means inconclusive, not finite.
pub fn certify_infinite<F: Field>(a: &AlgebraTable<F>, cut: &[i64]) -> Result<Option<InfinitenessCertificate>> {
    let corner = a.cut_at_vertices(cut)?;
    let quotient = corner.radical_square_quotient()?;
    debug_assert!(quotient.loewy_length()? <= 2);
    let q = quotient.ext1_quiver()?;
    let separated = separated_quiver(&q);
    let graph = separated.underlying_graph();
    for comp in graph.components() {
        let sub = graph.induced(&comp);
        let class = recognize(&sub)?;
        if class.is_dynkin() {
            continue;
        }
        return Ok(Some(InfinitenessCertificate {
            cut: quotient.vertices().to_vec(),
            corner_arrows: q.arrows().iter().map(|a| (a.src, a.tgt)).collect(),
            component: comp.iter().map(|&k| node(&q, k)).collect(),
            component_edges: sub.edges().iter().map(|&(x, y)| (node(&q, x), node(&q, y))).collect(),
            class: class.to_string(),
        }));
    }
    Ok(None)
}

/// Tries the cuts that contain `required`, smallest first.
pub fn search_certificate<F: Field>(a: &AlgebraTable<F>, required: i64) -> Result<Option<InfinitenessCertificate>> {
    let others: Vec<i64> = a.vertices().iter().copied().filter(|&v| v != required).collect();
    let mut masks: Vec<usize> = (0..1usize << others.len()).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let mut cut = vec![required];
        cut.extend(others.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &v)| v));
        if let Some(c) = certify_infinite(a, &cut)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

impl InfinitenessCertificate {
    /// Re-runs the recognizer on the recorded component.
    pub fn revalidate(&self) -> Result<bool> {
        let index = |s: &String| self.component.iter().position(|c| c == s).map(|p| p as i64 + 1);
        let edges: Option<Vec<(i64, i64)>> =
            self.component_edges.iter().map(|(x, y)| Some((index(x)?, index(y)?))).collect();
        let Some(edges) = edges else { return Ok(false) };
        let g = crate::graphs::MarkedGraph::new((1..=self.component.len() as i64).collect(), edges)?;
        let class = recognize(&g)?;
        Ok(!class.is_dynkin() && class.to_string() == self.class)
    }

    pub fn graph_class(&self) -> Option<GraphClass> {
        let index = |s: &String| self.component.iter().position(|c| c == s).map(|p| p as i64 + 1);
        let edges: Vec<(i64, i64)> =
            self.component_edges.iter().filter_map(|(x, y)| Some((index(x)?, index(y)?))).collect();
        let g = crate::graphs::MarkedGraph::new((1..=self.component.len() as i64).collect(), edges).ok()?;
        recognize(&g).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuiverAlgebra;
    use crate::constructions::families::{path_algebra, triv_kq};
    use crate::field::Q;
    use crate::graphs::Family;

    #[test]
    fn kronecker_path_algebra_is_certified() {
        let q = Quiver::from_triples(vec![1, 2], &[("a", 1, 2), ("b", 1, 2)]).unwrap();
        let kq: QuiverAlgebra<Q> = path_algebra(&q).unwrap();
        let c = certify_infinite(kq.table(), &[1, 2]).unwrap().unwrap();
        assert_eq!(c.class, "~A1");
        assert!(c.revalidate().unwrap());
        assert_eq!(c.graph_class(), Some(GraphClass::Euclidean(Family::A, 1)));
    }

    #[test]
    fn dynkin_cases_are_inconclusive() {
        let q = Quiver::from_triples(vec![1, 2, 3], &[("a", 1, 2), ("b", 2, 3)]).unwrap();
        let t: QuiverAlgebra<Q> = triv_kq(&q).unwrap();
        assert!(certify_infinite(t.table(), &[1, 2, 3]).unwrap().is_none());
        assert!(certify_infinite(t.table(), &[1]).unwrap().is_none());
    }
}
