//! The algebra families: symmetric Nakayama algebras `N_{n,m}`, modified
//! Brauer star algebras `B_n^ε`, path algebras and their trivial extensions.
//!
//! Each family is built twice. The closed forms multiply explicit normal-form
//! words by hand-written rewriting; the presentations go through the
//! truncation engine. Agreement of the two is checked by [`agrees_via`].

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::algebra::{algebra_from_presentation, AlgebraTable, Path, Presentation, QuiverAlgebra, Relation};
use crate::constructions::triv::trivial_extension;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::Quiver;
use crate::linalg::{Matrix, SparseVec};

/// A closed-form table whose basis elements are words `(start vertex position, arrows)`.
#[derive(Clone, Debug)]
pub struct WordTable<F: Field> {
    pub table: AlgebraTable<F>,
    pub words: Vec<(usize, Path)>,
}

fn word_end(q: &Quiver, start: usize, w: &[usize]) -> usize {
    match w.last() {
        Some(&a) => q.vertex_index(q.arrows()[a].tgt).expect("arrow target"),
        None => start,
    }
}

/// Builds a table from a list of normal words and a rewriting function that
/// sends any composable word to `c · (normal word)` or to zero.
pub fn word_table<F: Field>(
    q: &Quiver,
    words: Vec<(usize, Path)>,
    reduce: impl Fn(Path) -> Option<(F, Path)>,
    graded: bool,
) -> Result<WordTable<F>> {
    let index: HashMap<(usize, Path), usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    if index.len() != words.len() {
        return Err(Error::InvalidAlgebra("repeated normal word".into()));
    }
    let d = words.len();
    let mut mul = vec![vec![SparseVec::new(); d]; d];
    for (i, (si, wi)) in words.iter().enumerate() {
        let end = word_end(q, *si, wi);
        for (j, (sj, wj)) in words.iter().enumerate() {
            if *sj != end {
                continue;
            }
            let word: Path = wi.iter().chain(wj).copied().collect();
            if let Some((c, nf)) = reduce(word.clone()) {
                if c.is_zero() {
                    continue;
                }
                let k = index.get(&(*si, nf.clone())).ok_or_else(|| {
                    Error::InvalidAlgebra(format!("word {word:?} rewrites to {nf:?}, which is not a normal word"))
                })?;
                mul[i][j] = vec![(*k, c)];
            }
        }
    }
    let arrows = q.arrows();
    let labels = words
        .iter()
        .map(|(s, w)| {
            if w.is_empty() {
                format!("e{}", q.vertices()[*s])
            } else {
                w.iter().map(|&a| arrows[a].id.as_str()).collect::<Vec<_>>().join(".")
            }
        })
        .collect();
    let idempotents = (0..q.vertices().len())
        .map(|v| index.get(&(v, Vec::new())).copied().ok_or_else(|| Error::InvalidAlgebra("missing trivial path".into())))
        .collect::<Result<Vec<_>>>()?;
    let grading = graded.then(|| words.iter().map(|(_, w)| w.len()).collect());
    let table = AlgebraTable::new(labels, mul, idempotents, q.vertices().to_vec(), true, grading)?;
    Ok(WordTable { table, words })
}

/// Whether sending basis element `k` of `a` to `images[k]` is an isomorphism onto `b`.
pub fn agrees_via<F: Field>(a: &AlgebraTable<F>, b: &AlgebraTable<F>, images: &[Vec<F>]) -> bool {
    images.len() == a.dim()
        && images.iter().all(|v| v.len() == b.dim())
        && a.is_isomorphism_via(b, &Matrix::from_columns(images, b.dim()))
}

/// Whether a closed-form word table matches the presentation algebra word by word.
pub fn word_table_agrees<F: Field>(closed: &WordTable<F>, qa: &QuiverAlgebra<F>) -> bool {
    let images: Vec<Vec<F>> = closed.words.iter().map(|(s, w)| qa.element_of_word(*s, w)).collect();
    agrees_via(&closed.table, qa.table(), &images)
}

fn contains_at(w: &[usize], pat: &[usize]) -> Option<usize> {
    (pat.len() <= w.len()).then(|| w.windows(pat.len()).position(|x| x == pat)).flatten()
}

// ---------------------------------------------------------------------------
// Symmetric Nakayama algebras

/// Cyclic quiver `1 → 2 → ⋯ → n → 1` with arrows `b1..bn`.
pub fn cyclic_quiver(n: usize) -> Result<Quiver> {
    if n == 0 {
        return Err(Error::InvalidType("a cyclic quiver needs at least one vertex".into()));
    }
    let ids: Vec<String> = (1..=n).map(|i| format!("b{i}")).collect();
    let triples: Vec<(&str, i64, i64)> =
        (1..=n).map(|i| (ids[i - 1].as_str(), i as i64, (i % n + 1) as i64)).collect();
    Quiver::from_triples((1..=n as i64).collect(), &triples)
}

fn nakayama_check(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidType(format!("N_{{{n},{m}}} needs n, m ≥ 1")));
    }
    Ok(())
}

/// `N_{n,m}`: the cyclic quiver modulo all paths of length `mn + 1`.
pub fn nakayama_presentation<F: Field>(n: usize, m: usize) -> Result<Presentation<F>> {
    nakayama_check(n, m)?;
    let q = cyclic_quiver(n)?;
    let len = m * n + 1;
    let rels = (0..n)
        .map(|s| {
            let ids: Vec<String> = (0..len).map(|k| format!("b{}", (s + k) % n + 1)).collect();
            Relation::zero(&ids.iter().map(String::as_str).collect::<Vec<_>>())
        })
        .collect();
    Presentation::new(q, rels, len + 1)
}

pub fn nakayama<F: Field>(n: usize, m: usize) -> Result<QuiverAlgebra<F>> {
    algebra_from_presentation(&nakayama_presentation(n, m)?)
}

pub fn nakayama_closed<F: Field>(n: usize, m: usize) -> Result<WordTable<F>> {
    nakayama_check(n, m)?;
    let q = cyclic_quiver(n)?;
    let top = m * n;
    let words = (0..n).flat_map(|s| (0..=top).map(move |l| (s, (0..l).map(|k| (s + k) % n).collect()))).collect();
    word_table(&q, words, |w: Path| (w.len() <= top).then(|| (F::one(), w)), true)
}

// ---------------------------------------------------------------------------
// Modified Brauer star algebras

fn mbs_check(n: usize, eps: u8) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidType(format!("B_{n}^ε needs n ≥ 2")));
    }
    if eps > 1 {
        return Err(Error::InvalidType(format!("ε must be 0 or 1, got {eps}")));
    }
    Ok(())
}

/// Loop `a` at vertex 1 together with the cycle `b1: 1 → 2, …, bn: n → 1`.
pub fn mbs_quiver(n: usize) -> Result<Quiver> {
    let ids: Vec<String> = (1..=n).map(|i| format!("b{i}")).collect();
    let mut triples: Vec<(&str, i64, i64)> = vec![("a", 1, 1)];
    triples.extend((1..=n).map(|i| (ids[i - 1].as_str(), i as i64, (i % n + 1) as i64)));
    Quiver::from_triples((1..=n as i64).collect(), &triples)
}

pub fn mbs_presentation<F: Field>(n: usize, eps: u8) -> Result<Presentation<F>> {
    mbs_check(n, eps)?;
    let b: Vec<String> = (1..=n).map(|i| format!("b{i}")).collect();
    let bs = |from: usize, to: usize| -> Vec<&str> { (from..=to).map(|i| b[i - 1].as_str()).collect() };
    let bn = b[n - 1].as_str();
    let mut rels = vec![
        Relation::zero(&["a", "a", "b1"]),
        Relation::zero(&[bn, "a", "a"]),
        Relation::equal(&bs(1, n), &["a", "a"]),
    ];
    rels.push(if eps == 0 {
        Relation::zero(&[bn, "b1"])
    } else {
        Relation::new(vec![(vec![bn, "b1"], F::one()), (vec![bn, "a", "b1"], -F::one())])
    });
    for i in 2..=n {
        let mut w = bs(i, n);
        w.push("a");
        w.extend(bs(1, i));
        rels.push(Relation::zero(&w));
    }
    Presentation::new(mbs_quiver(n)?, rels, 2 * n + 3)
}

pub fn modified_brauer_star<F: Field>(n: usize, eps: u8) -> Result<QuiverAlgebra<F>> {
    algebra_from_presentation(&mbs_presentation(n, eps)?)
}

/// Normal words of `B_n^ε` with arrow indices `a = 0`, `b_k = k`.
pub fn mbs_normal_words(n: usize) -> Vec<(usize, Path)> {
    let b = |from: usize, to: usize| (from..=to).collect::<Path>();
    let mut words = vec![(0, vec![]), (0, vec![0]), (0, vec![0, 0]), (0, vec![0, 0, 0])];
    for k in 1..n {
        words.push((0, b(1, k)));
        let mut w = vec![0];
        w.extend(b(1, k));
        words.push((0, w));
    }
    for i in 2..=n {
        words.push((i - 1, vec![]));
        for j in i..=n {
            words.push((i - 1, b(i, j)));
        }
        for k in 0..i {
            let mut w = b(i, n);
            w.push(0);
            w.extend(b(1, k));
            words.push((i - 1, w));
        }
    }
    words
}

fn mbs_reduce<F: Field>(n: usize, eps: u8, mut w: Path) -> Option<(F, Path)> {
    let full: Path = (1..=n).collect();
    let mut zeros: Vec<Path> = vec![vec![0, 0, 0, 0], vec![0, 0, 1], vec![n, 0, 0]];
    for i in 2..=n {
        let mut z: Path = (i..=n).collect();
        z.push(0);
        z.extend(1..=i);
        zeros.push(z);
    }
    loop {
        if zeros.iter().any(|z| contains_at(&w, z).is_some()) {
            return None;
        }
        if let Some(p) = contains_at(&w, &full) {
            w.splice(p..p + n, [0, 0]);
            continue;
        }
        if let Some(p) = contains_at(&w, &[n, 1]) {
            if eps == 0 {
                return None;
            }
            w.insert(p + 1, 0);
            continue;
        }
        return Some((F::one(), w));
    }
}

pub fn mbs_closed<F: Field>(n: usize, eps: u8) -> Result<WordTable<F>> {
    mbs_check(n, eps)?;
    word_table(&mbs_quiver(n)?, mbs_normal_words(n), |w| mbs_reduce(n, eps, w), false)
}

// ---------------------------------------------------------------------------
// Path algebras and trivial extensions

/// All paths of an acyclic quiver, trivial paths first.
pub fn all_paths(q: &Quiver) -> Result<Vec<(usize, Path)>> {
    if !q.is_acyclic() {
        return Err(Error::InvalidGraph("path algebra of a quiver with oriented cycles".into()));
    }
    let arrows = q.arrows();
    let mut out: Vec<(usize, Path)> = (0..q.vertices().len()).map(|v| (v, vec![])).collect();
    let mut layer = out.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for (s, w) in &layer {
            let end = q.vertices()[word_end(q, *s, w)];
            for (ai, a) in arrows.iter().enumerate() {
                if a.src == end {
                    let mut x = w.clone();
                    x.push(ai);
                    next.push((*s, x));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

fn longest_path(q: &Quiver) -> Result<usize> {
    Ok(all_paths(q)?.iter().map(|(_, w)| w.len()).max().unwrap_or(0))
}

pub fn path_algebra_presentation<F: Field>(q: &Quiver) -> Result<Presentation<F>> {
    Presentation::new(q.clone(), vec![], longest_path(q)? + 1)
}

pub fn path_algebra<F: Field>(q: &Quiver) -> Result<QuiverAlgebra<F>> {
    algebra_from_presentation(&path_algebra_presentation(q)?)
}

pub fn path_algebra_closed<F: Field>(q: &Quiver) -> Result<WordTable<F>> {
    word_table(q, all_paths(q)?, |w| Some((F::one(), w)), true)
}

/// Presentation data for `Triv(KQ)`: the quiver `Q` plus one arrow
/// `r{k}: t(p) → s(p)` for each maximal path `p`.
#[derive(Clone, Debug)]
pub struct TrivKq<F: Field> {
    pub presentation: Presentation<F>,
    /// Maximal paths of `Q` in the order of the added arrows.
    pub maximal_paths: Vec<(usize, Path)>,
    /// For each path `z` of `Q`, a word of the extended quiver representing the dual element `z*`.
    pub dual_words: BTreeMap<(usize, Path), (usize, Path)>,
}

/// Maximal paths, counting a trivial path at an isolated vertex as maximal.
pub fn maximal_paths(q: &Quiver) -> Result<Vec<(usize, Path)>> {
    let paths = all_paths(q)?;
    let arrows = q.arrows();
    Ok(paths
        .into_iter()
        .filter(|(s, w)| {
            let sv = q.vertices()[*s];
            let tv = q.vertices()[word_end(q, *s, w)];
            !arrows.iter().any(|a| a.tgt == sv) && !arrows.iter().any(|a| a.src == tv)
        })
        .collect())
}

pub fn triv_kq_presentation<F: Field>(q: &Quiver) -> Result<TrivKq<F>> {
    let maxp = maximal_paths(q)?;
    let nq = q.arrows().len();
    let vpos = |v: i64| q.vertex_index(v).expect("vertex");
    let mut ids: Vec<String> = q.arrows().iter().map(|a| a.id.clone()).collect();
    let mut triples: Vec<(String, i64, i64)> = q.arrows().iter().map(|a| (a.id.clone(), a.src, a.tgt)).collect();
    for (k, (s, w)) in maxp.iter().enumerate() {
        let id = format!("r{}", k + 1);
        if q.arrow_index(&id).is_some() {
            return Err(Error::InvalidGraph(format!("arrow id {id} is reserved")));
        }
        triples.push((id.clone(), q.vertices()[word_end(q, *s, w)], q.vertices()[*s]));
        ids.push(id);
    }
    let t_refs: Vec<(&str, i64, i64)> = triples.iter().map(|(i, s, t)| (i.as_str(), *s, *t)).collect();
    let big = Quiver::from_triples(q.vertices().to_vec(), &t_refs)?;

    // Every path z ⊆ p (p = w z u) gives the word u · r_p · w for z*.
    let mut reps: BTreeMap<(usize, Path), Vec<(usize, Path)>> = BTreeMap::new();
    for (k, (s, p)) in maxp.iter().enumerate() {
        let mut verts = vec![*s];
        for &a in p {
            verts.push(vpos(q.arrows()[a].tgt));
        }
        for i in 0..=p.len() {
            for j in i..=p.len() {
                let z = (verts[i], p[i..j].to_vec());
                let mut word: Path = p[j..].to_vec();
                word.push(nq + k);
                word.extend_from_slice(&p[..i]);
                reps.entry(z).or_default().push((verts[j], word));
            }
        }
    }
    let mut allowed: BTreeSet<Path> = all_paths(q)?.into_iter().map(|(_, w)| w).filter(|w| !w.is_empty()).collect();
    for rs in reps.values() {
        allowed.extend(rs.iter().map(|(_, w)| w.clone()));
    }
    let as_ids = |w: &Path| -> Vec<&str> { w.iter().map(|&a| ids[a].as_str()).collect() };
    let mut rels = Vec::new();
    for rs in reps.values() {
        for (_, other) in &rs[1..] {
            rels.push(Relation::equal(&as_ids(&rs[0].1), &as_ids(other)));
        }
    }
    let arrows = big.arrows();
    let mut zero_words = BTreeSet::new();
    for w in &allowed {
        let end = arrows[*w.last().expect("nonempty")].tgt;
        for (x, a) in arrows.iter().enumerate() {
            if a.src != end {
                continue;
            }
            let mut ext = w.clone();
            ext.push(x);
            if !allowed.contains(&ext) && allowed.contains(&ext[1..]) {
                zero_words.insert(ext);
            }
        }
    }
    rels.extend(zero_words.iter().map(|w| Relation::zero(&as_ids(w))));
    let lp = maxp.iter().map(|(_, w)| w.len()).max().unwrap_or(0);
    let presentation = Presentation::new(big, rels, 2 * lp + 2)?;
    let dual_words = reps.into_iter().map(|(z, rs)| (z, rs[0].clone())).collect();
    Ok(TrivKq { presentation, maximal_paths: maxp, dual_words })
}

pub fn triv_kq<F: Field>(q: &Quiver) -> Result<QuiverAlgebra<F>> {
    algebra_from_presentation(&triv_kq_presentation::<F>(q)?.presentation)
}

/// Closed-form `Triv(KQ)` from the trivial-extension formula, together with
/// the images of its basis in the presentation algebra.
pub fn triv_kq_closed_images<F: Field>(q: &Quiver, qa: &QuiverAlgebra<F>) -> Result<(AlgebraTable<F>, Vec<Vec<F>>)> {
    let pa = path_algebra_closed::<F>(q)?;
    let tk = triv_kq_presentation::<F>(q)?;
    let triv = trivial_extension(&pa.table)?;
    let mut images: Vec<Vec<F>> = pa.words.iter().map(|(s, w)| qa.element_of_word(*s, w)).collect();
    for z in &pa.words {
        let (s, w) = tk.dual_words.get(z).ok_or_else(|| Error::Other("path outside every maximal path".into()))?;
        images.push(qa.element_of_word(*s, w));
    }
    Ok((triv, images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Q, F2};

    #[test]
    fn nakayama_dimensions_and_agreement() {
        for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
            let qa = nakayama::<Q>(n, m).unwrap();
            assert_eq!(qa.table().dim(), n * (m * n + 1));
            assert!(word_table_agrees(&nakayama_closed(n, m).unwrap(), &qa));
        }
    }

    #[test]
    fn mbs_b2_data() {
        for eps in [0, 1] {
            let qa = modified_brauer_star::<F2>(2, eps).unwrap();
            assert_eq!(qa.table().dim(), 10);
            assert_eq!(qa.table().cartan_matrix(), vec![vec![4, 2], vec![2, 2]]);
            assert!(word_table_agrees(&mbs_closed(2, eps).unwrap(), &qa));
        }
    }

    #[test]
    fn mbs_closed_form_matches_presentation() {
        for n in 2..=4 {
            for eps in [0, 1] {
                let qa = modified_brauer_star::<F2>(n, eps).unwrap();
                assert_eq!(qa.table().dim(), mbs_normal_words(n).len());
                assert!(word_table_agrees(&mbs_closed(n, eps).unwrap(), &qa), "n={n} eps={eps}");
            }
            let qa = modified_brauer_star::<Q>(n, 0).unwrap();
            assert!(word_table_agrees(&mbs_closed(n, 0).unwrap(), &qa));
        }
    }

    #[test]
    fn triv_presentations_match_formula_for_all_small_orientations() {
        let quivers = [
            Quiver::from_triples(vec![1], &[]).unwrap(),
            Quiver::from_triples(vec![1, 2, 3], &[("a", 1, 2), ("b", 2, 3)]).unwrap(),
            Quiver::from_triples(vec![1, 2, 3], &[("a", 1, 2), ("b", 3, 2)]).unwrap(),
            Quiver::from_triples(vec![1, 2, 3], &[("a", 2, 1), ("b", 2, 3)]).unwrap(),
            Quiver::from_triples(vec![1, 2, 3, 4], &[("a", 1, 2), ("b", 3, 2), ("c", 2, 4)]).unwrap(),
            Quiver::from_triples(vec![1, 2, 3, 4], &[("a", 1, 2), ("b", 3, 2), ("c", 4, 2)]).unwrap(),
            Quiver::from_triples(vec![1, 2, 3, 4], &[("a", 2, 1), ("b", 2, 3), ("c", 4, 2)]).unwrap(),
        ];
        for q in &quivers {
            let qa = triv_kq::<Q>(q).unwrap();
            let kq = path_algebra::<Q>(q).unwrap();
            assert_eq!(qa.table().dim(), 2 * kq.table().dim());
            let (closed, images) = triv_kq_closed_images(q, &qa).unwrap();
            assert!(agrees_via(&closed, qa.table(), &images), "{q:?}");
        }
    }

    #[test]
    fn mbs_word_count() {
        for n in 2..6 {
            assert_eq!(mbs_normal_words(n).len(), 2 * n + 2 + (n - 1) * (n + 2));
        }
    }

    #[test]
    fn triv_of_a2() {
        let q = Quiver::from_triples(vec![1, 2], &[("a", 1, 2)]).unwrap();
        let qa = triv_kq::<Q>(&q).unwrap();
        assert_eq!(qa.table().dim(), 6);
        assert_eq!(qa.table().cartan_matrix(), vec![vec![2, 1], vec![1, 2]]);
        let (closed, images) = triv_kq_closed_images(&q, &qa).unwrap();
        assert!(agrees_via(&closed, qa.table(), &images));
    }

    #[test]
    fn cyclic_quivers_are_rejected_for_path_algebras() {
        assert!(path_algebra::<Q>(&cyclic_quiver(2).unwrap()).is_err());
    }
}
