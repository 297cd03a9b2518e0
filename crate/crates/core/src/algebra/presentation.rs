//! Quotients of path algebras by admissible ideals, computed by truncation.
//!
//! Paths are written left to right: `ab` means "first `a`, then `b`". The
//! algebra `KQ/I` is computed as `KQ_{<L} / span{u·r·w}` for increasing `L`;
//! agreement of the dimensions at `L` and `L+1` shows `J^L ⊆ I + J^{L+1}`,
//! hence `J^L ⊆ I` by Nakayama, so the truncated answer is exact.

use std::collections::HashMap;

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::Quiver;
use crate::linalg::{SparseEchelon, SparseVec};

/// Sequence of arrow indices.
pub type Path = Vec<usize>;

const MAX_L: usize = 64;
const MAX_PATHS: usize = 400_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<F> {
    /// `(arrow ids, coefficient)` pairs.
    pub terms: Vec<(Vec<String>, F)>,
}

impl<F: Field> Relation<F> {
    pub fn new(terms: Vec<(Vec<&str>, F)>) -> Self {
        Relation { terms: terms.into_iter().map(|(p, c)| (p.into_iter().map(String::from).collect(), c)).collect() }
    }

    /// `p = q`
    pub fn equal(p: &[&str], q: &[&str]) -> Self {
        Self::new(vec![(p.to_vec(), F::one()), (q.to_vec(), -F::one())])
    }

    pub fn zero(p: &[&str]) -> Self {
        Self::new(vec![(p.to_vec(), F::one())])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation<F> {
    pub quiver: Quiver,
    pub relations: Vec<Relation<F>>,
    pub truncation: usize,
}

/// A relation with arrows resolved to indices.
#[derive(Clone, Debug)]
pub struct IndexedRelation<F> {
    pub src: i64,
    pub tgt: i64,
    pub terms: Vec<(Path, F)>,
}

impl<F: Field> Presentation<F> {
    pub fn new(quiver: Quiver, relations: Vec<Relation<F>>, truncation: usize) -> Result<Self> {
        let p = Presentation { quiver, relations, truncation };
        p.indexed_relations()?;
        Ok(p)
    }

    pub fn indexed_relations(&self) -> Result<Vec<IndexedRelation<F>>> {
        let bad = |s: String| Err(Error::InvalidPresentation(s));
        let mut out = Vec::new();
        let mut longest = 0;
        for (ri, rel) in self.relations.iter().enumerate() {
            let mut terms: Vec<(Path, F)> = Vec::new();
            let mut ends = None;
            for (word, coeff) in &rel.terms {
                if word.len() < 2 {
                    return bad(format!("relation {ri} has a term of length < 2"));
                }
                let path = word
                    .iter()
                    .map(|id| self.quiver.arrow_index(id).ok_or_else(|| Error::UnknownArrow(id.clone())))
                    .collect::<Result<Path>>()?;
                let arrows = self.quiver.arrows();
                if path.windows(2).any(|w| arrows[w[0]].tgt != arrows[w[1]].src) {
                    return bad(format!("relation {ri} contains a non-composable word"));
                }
                let e = (arrows[path[0]].src, arrows[*path.last().expect("nonempty")].tgt);
                if *ends.get_or_insert(e) != e {
                    return bad(format!("relation {ri} mixes non-parallel paths"));
                }
                longest = longest.max(path.len());
                if !coeff.is_zero() {
                    terms.push((path, coeff.clone()));
                }
            }
            let Some((src, tgt)) = ends else {
                return bad(format!("relation {ri} is empty"));
            };
            out.push(IndexedRelation { src, tgt, terms });
        }
        if self.truncation < longest {
            return bad(format!("truncation bound {} below relation length {longest}", self.truncation));
        }
        Ok(out)
    }
}


struct Truncated<F> {
    paths: Vec<(Path, i64, i64)>,
    index: HashMap<Path, usize>,
    ideal: SparseEchelon<F>,
}

impl<F: Field> Truncated<F> {
    fn quotient_dim(&self) -> usize {
        self.paths.len() - self.ideal.dim()
    }

    fn build(quiver: &Quiver, relations: &[IndexedRelation<F>], l: usize) -> Result<Self> {
        let arrows = quiver.arrows();
        let mut paths: Vec<(Path, i64, i64)> = quiver.vertices().iter().map(|&v| (Vec::new(), v, v)).collect();
        let mut layer: Vec<usize> = (0..paths.len()).collect();
        for _ in 1..l {
            let mut next = Vec::new();
            for &pi in &layer {
                let (word, src, tgt) = paths[pi].clone();
                for (ai, a) in arrows.iter().enumerate() {
                    if a.src == tgt {
                        let mut w = word.clone();
                        w.push(ai);
                        next.push(paths.len());
                        paths.push((w, src, a.tgt));
                    }
                }
                if paths.len() > MAX_PATHS {
                    return Err(Error::Truncation(l));
                }
            }
            layer = next;
        }
        let index: HashMap<Path, usize> =
            paths.iter().enumerate().filter(|(_, (p, _, _))| !p.is_empty()).map(|(i, (p, _, _))| (p.clone(), i)).collect();
        let ending_at = |v: i64| paths.iter().enumerate().filter(move |(_, p)| p.2 == v).map(|(i, _)| i);
        let starting_at = |v: i64| paths.iter().enumerate().filter(move |(_, p)| p.1 == v).map(|(i, _)| i);

        let mut ideal = SparseEchelon::new();
        for rel in relations {
            let Some(min_len) = rel.terms.iter().map(|(t, _)| t.len()).min() else {
                continue;
            };
            let rights: Vec<usize> = starting_at(rel.tgt).collect();
            for u in ending_at(rel.src) {
                let lu = paths[u].0.len();
                if lu + min_len >= l {
                    continue;
                }
                for &w in &rights {
                    let lw = paths[w].0.len();
                    if lu + min_len + lw >= l {
                        continue;
                    }
                    let mut v: SparseVec<F> = Vec::with_capacity(rel.terms.len());
                    for (t, c) in &rel.terms {
                        if lu + t.len() + lw >= l {
                            continue;
                        }
                        let mut word = paths[u].0.clone();
                        word.extend_from_slice(t);
                        word.extend_from_slice(&paths[w].0);
                        v.push((index[&word], c.clone()));
                    }
                    v.sort_by_key(|(k, _)| *k);
                    let mut merged: SparseVec<F> = Vec::with_capacity(v.len());
                    for (k, c) in v {
                        match merged.last_mut() {
                            Some((lk, lc)) if *lk == k => *lc = lc.clone() + c,
                            _ => merged.push((k, c)),
                        }
                    }
                    merged.retain(|(_, c)| !c.is_zero());
                    ideal.insert(merged);
                }
            }
        }
        ideal.finish();
        Ok(Truncated { paths, index, ideal })
    }
}

/// An algebra `KQ/I` together with its presentation; basis elements are
/// normal-form paths.
#[derive(Clone, Debug)]
pub struct QuiverAlgebra<F: Field> {
    presentation: Presentation<F>,
    relations: Vec<IndexedRelation<F>>,
    table: AlgebraTable<F>,
    words: Vec<Path>,
    arrow_elems: Vec<usize>,
    truncation: usize,
}

impl<F: Field> QuiverAlgebra<F> {
    pub fn presentation(&self) -> &Presentation<F> {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn relations(&self) -> &[IndexedRelation<F>] {
        &self.relations
    }

    pub fn table(&self) -> &AlgebraTable<F> {
        &self.table
    }

    pub fn into_table(self) -> AlgebraTable<F> {
        self.table
    }

    /// The certified truncation bound.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Word of each basis element.
    pub fn words(&self) -> &[Path] {
        &self.words
    }

    /// Basis index of arrow `a`.
    pub fn arrow_element(&self, a: usize) -> usize {
        self.arrow_elems[a]
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver().vertices().len()
    }

    pub fn vertex_position(&self, v: i64) -> Option<usize> {
        self.quiver().vertex_index(v)
    }

    /// Element represented by a word of arrows (the empty word at vertex position `i` is `e_i`).
    pub fn element_of_word(&self, start: usize, word: &[usize]) -> Vec<F> {
        let mut x = self.table.basis_vec(self.table.idempotents()[start]);
        for &a in word {
            x = self.table.mul_by_basis(&x, self.arrow_elems[a]);
        }
        x
    }

    /// Element for a word given by arrow ids.
    pub fn element_of_ids(&self, ids: &[&str]) -> Result<Vec<F>> {
        let word = ids
            .iter()
            .map(|id| self.quiver().arrow_index(id).ok_or_else(|| Error::UnknownArrow(id.to_string())))
            .collect::<Result<Path>>()?;
        let start = match word.first() {
            Some(&a) => self.vertex_position(self.quiver().arrows()[a].src).expect("arrow source"),
            None => return Err(Error::InvalidPresentation("empty word".into())),
        };
        Ok(self.element_of_word(start, &word))
    }
}

pub fn algebra_from_presentation<F: Field>(p: &Presentation<F>) -> Result<QuiverAlgebra<F>> {
    let relations = p.indexed_relations()?;
    let mut l = p.truncation.max(2);
    loop {
        let lower = Truncated::build(&p.quiver, &relations, l)?;
        let upper = Truncated::build(&p.quiver, &relations, l + 1)?;
        if lower.quotient_dim() == upper.quotient_dim() {
            return table_from_truncated(p, relations, lower, l);
        }
        if l >= MAX_L {
            return Err(Error::Truncation(l));
        }
        l = (2 * l).min(MAX_L);
    }
}

fn table_from_truncated<F: Field>(
    p: &Presentation<F>,
    relations: Vec<IndexedRelation<F>>,
    t: Truncated<F>,
    l: usize,
) -> Result<QuiverAlgebra<F>> {
    let basis: Vec<usize> = (0..t.paths.len()).filter(|&i| !t.ideal.is_pivot(i)).collect();
    let mut position = vec![usize::MAX; t.paths.len()];
    for (n, &i) in basis.iter().enumerate() {
        position[i] = n;
    }
    let mut mul = Vec::with_capacity(basis.len());
    for &i in &basis {
        let (pi, _, ti) = &t.paths[i];
        let mut row = Vec::with_capacity(basis.len());
        for &j in &basis {
            let (pj, sj, _) = &t.paths[j];
            if ti != sj || pi.len() + pj.len() >= l {
                row.push(Vec::new());
                continue;
            }
            if pi.is_empty() || pj.is_empty() {
                let k = if pi.is_empty() { j } else { i };
                row.push(vec![(position[k], F::one())]);
                continue;
            }
            let word: Path = pi.iter().chain(pj).copied().collect();
            let nf = t.ideal.normal_form(&vec![(t.index[&word], F::one())]);
            row.push(nf.into_iter().map(|(k, c)| (position[k], c)).collect());
        }
        mul.push(row);
    }
    let arrows = p.quiver.arrows();
    let label = |w: &Path, v: i64| {
        if w.is_empty() {
            format!("e{v}")
        } else {
            w.iter().map(|&a| arrows[a].id.as_str()).collect::<Vec<_>>().join(".")
        }
    };
    let nv = p.quiver.vertices().len();
    let table = AlgebraTable::new(
        basis.iter().map(|&i| label(&t.paths[i].0, t.paths[i].1)).collect(),
        mul,
        (0..nv).map(|i| position[i]).collect(),
        p.quiver.vertices().to_vec(),
        true,
        Some(basis.iter().map(|&i| t.paths[i].0.len()).collect()),
    )?;
    let arrow_elems = (0..arrows.len()).map(|a| position[t.index[&vec![a]]]).collect();
    Ok(QuiverAlgebra {
        presentation: p.clone(),
        relations,
        words: basis.iter().map(|&i| t.paths[i].0.clone()).collect(),
        table,
        arrow_elems,
        truncation: l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn linear_a2_without_relations() {
        let q = Quiver::from_triples(vec![1, 2], &[("a", 1, 2)]).unwrap();
        let a = algebra_from_presentation(&Presentation::<Q>::new(q, vec![], 3).unwrap()).unwrap();
        assert_eq!(a.table().dim(), 3);
        assert_eq!(a.table().labels(), &["e1", "e2", "a"]);
        a.table().validate().unwrap();
    }

    #[test]
    fn commutative_square() {
        let q = Quiver::from_triples(vec![1, 2, 3, 4], &[("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)]).unwrap();
        let p = Presentation::<Q>::new(q, vec![Relation::equal(&["a", "b"], &["c", "d"])], 3).unwrap();
        let a = algebra_from_presentation(&p).unwrap();
        assert_eq!(a.table().dim(), 9);
        assert_eq!(a.element_of_ids(&["a", "b"]).unwrap(), a.element_of_ids(&["c", "d"]).unwrap());
        a.table().validate().unwrap();
    }

    #[test]
    fn truncated_loop_and_doubling() {
        let q = Quiver::from_triples(vec![1], &[("x", 1, 1)]).unwrap();
        let p = Presentation::<Q>::new(q.clone(), vec![Relation::zero(&["x", "x", "x", "x", "x"])], 5).unwrap();
        assert_eq!(algebra_from_presentation(&p).unwrap().table().dim(), 5);
        // Starting below the Loewy length forces the bound to grow.
        let cyc = Quiver::from_triples(vec![1, 2], &[("a", 1, 2), ("b", 2, 1)]).unwrap();
        let p = Presentation::<Q>::new(cyc, vec![Relation::zero(&["a", "b"])], 2).unwrap();
        let a = algebra_from_presentation(&p).unwrap();
        assert_eq!(a.table().dim(), 5);
        assert_eq!(a.truncation(), 4);
    }

    #[test]
    fn non_admissible_ideal_is_rejected() {
        let q = Quiver::from_triples(vec![1], &[("x", 1, 1)]).unwrap();
        let p = Presentation::<Q>::new(q, vec![], 2).unwrap();
        assert!(matches!(algebra_from_presentation(&p), Err(Error::Truncation(_))));
    }

    #[test]
    fn malformed_relations() {
        let q = Quiver::from_triples(vec![1, 2], &[("a", 1, 2), ("b", 2, 1)]).unwrap();
        assert!(Presentation::<Q>::new(q.clone(), vec![Relation::zero(&["a"])], 3).is_err());
        assert!(Presentation::<Q>::new(q.clone(), vec![Relation::zero(&["a", "a"])], 3).is_err());
        assert!(Presentation::<Q>::new(q.clone(), vec![Relation::equal(&["a", "b"], &["b", "a"])], 3).is_err());
        assert!(matches!(
            Presentation::<Q>::new(q, vec![Relation::zero(&["a", "z"])], 3),
            Err(Error::UnknownArrow(_))
        ));
    }
}
