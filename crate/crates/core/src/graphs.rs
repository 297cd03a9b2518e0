//! Labeled graphs and quivers, ADE / affine ADE recognition, extension
//! graphs, separated quivers and the shapes `(Δ, f)` of representation-finite
//! symmetric types.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            _ => Err(Error::InvalidType(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Dynkin(Family, usize),
    /// Affine type; the rank is the number of vertices minus one.
    Euclidean(Family, usize),
    Other,
}

impl GraphClass {
    pub fn is_dynkin(&self) -> bool {
        matches!(self, GraphClass::Dynkin(..))
    }

    pub fn is_euclidean(&self) -> bool {
        matches!(self, GraphClass::Euclidean(..))
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Dynkin(fam, n) => write!(f, "{fam}{n}"),
            GraphClass::Euclidean(fam, n) => write!(f, "~{fam}{n}"),
            GraphClass::Other => f.write_str("other"),
        }
    }
}

/// Finite undirected multigraph with integer vertex labels.
#[derive(Clone, Debug)]
pub struct MarkedGraph {
    vertices: Vec<i64>,
    edges: Vec<(i64, i64)>,
    connected: OnceLock<bool>,
}

impl PartialEq for MarkedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for MarkedGraph {}

impl MarkedGraph {
    pub fn new(vertices: Vec<i64>, edges: Vec<(i64, i64)>) -> Result<Self> {
        let set: BTreeSet<i64> = vertices.iter().copied().collect();
        if set.len() != vertices.len() {
            return Err(Error::InvalidGraph("duplicate vertex label".into()));
        }
        for &(a, b) in &edges {
            for v in [a, b] {
                if !set.contains(&v) {
                    return Err(Error::UnknownVertex(v));
                }
            }
        }
        Ok(MarkedGraph { vertices, edges, connected: OnceLock::new() })
    }

    /// Path `1 - 2 - ⋯ - n`.
    pub fn path(n: usize) -> Self {
        let n = n as i64;
        Self::new((1..=n).collect(), (1..n).map(|i| (i, i + 1)).collect()).expect("valid path")
    }

    /// Dynkin graph with the standard labeling: `A_n` is the path `1..n`;
    /// `D_n` is the path `1..n-1` with `n` attached to `n-2`; `E_n` is the path
    /// `1..n-1` with `n` attached to `3`.
    pub fn dynkin(family: Family, n: usize) -> Result<Self> {
        let bad = || Error::InvalidType(format!("no Dynkin graph {family}{n}"));
        match family {
            Family::A if n >= 1 => Ok(Self::path(n)),
            Family::D if n >= 4 => {
                let mut g = Self::path(n - 1);
                g.vertices.push(n as i64);
                g.edges.push((n as i64 - 2, n as i64));
                Ok(g)
            }
            Family::E if (6..=8).contains(&n) => {
                let mut g = Self::path(n - 1);
                g.vertices.push(n as i64);
                g.edges.push((3, n as i64));
                Ok(g)
            }
            _ => Err(bad()),
        }
    }

    pub fn vertices(&self) -> &[i64] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(i64, i64)] {
        &self.edges
    }

    pub fn contains(&self, v: i64) -> bool {
        self.vertices.contains(&v)
    }

    pub fn degree(&self, v: i64) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    fn neighbours(&self) -> HashMap<i64, Vec<i64>> {
        let mut adj: HashMap<i64, Vec<i64>> = self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(a, b) in &self.edges {
            adj.get_mut(&a).expect("endpoint").push(b);
            if a != b {
                adj.get_mut(&b).expect("endpoint").push(a);
            }
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        *self.connected.get_or_init(|| self.components().len() <= 1)
    }

    /// Vertex sets of the connected components, each sorted, in order of first vertex.
    pub fn components(&self) -> Vec<Vec<i64>> {
        let adj = self.neighbours();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[&v] {
                    if seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn induced(&self, vs: &[i64]) -> Self {
        let set: BTreeSet<i64> = vs.iter().copied().collect();
        let edges = self.edges.iter().filter(|(a, b)| set.contains(a) && set.contains(b)).copied().collect();
        MarkedGraph { vertices: vs.to_vec(), edges, connected: OnceLock::new() }
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &BTreeMap<i64, i64>) -> Self {
        let f = |v: i64| perm.get(&v).copied().unwrap_or(v);
        MarkedGraph {
            vertices: self.vertices.iter().map(|&v| f(v)).collect(),
            edges: self.edges.iter().map(|&(a, b)| (f(a), f(b))).collect(),
            connected: OnceLock::new(),
        }
    }

    /// Sorted arm lengths at a branch vertex of a tree.
    fn arms(&self, centre: i64, adj: &HashMap<i64, Vec<i64>>) -> Vec<usize> {
        let mut arms: Vec<usize> = adj[&centre]
            .iter()
            .map(|&first| {
                let (mut prev, mut cur, mut len) = (centre, first, 1);
                while adj[&cur].len() == 2 {
                    let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            })
            .collect();
        arms.sort_unstable();
        arms
    }

    /// Arm profile of a tree with exactly one branch vertex.
    pub fn arm_profile(&self) -> Option<Vec<usize>> {
        let adj = self.neighbours();
        let branch: Vec<i64> = self.vertices.iter().copied().filter(|v| adj[v].len() >= 3).collect();
        if branch.len() != 1 || self.edges.len() + 1 != self.vertices.len() {
            return None;
        }
        Some(self.arms(branch[0], &adj))
    }
}

pub fn recognize(g: &MarkedGraph) -> Result<GraphClass> {
    let v = g.vertices.len();
    if v == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Ok(GraphClass::Other);
    }
    let e = g.edges.len();
    if g.edges.iter().any(|(a, b)| a == b) {
        return Ok(if v == 1 && e == 1 { GraphClass::Euclidean(Family::A, 0) } else { GraphClass::Other });
    }
    let pairs: BTreeSet<(i64, i64)> = g.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    if pairs.len() != e {
        return Ok(if v == 2 && e == 2 { GraphClass::Euclidean(Family::A, 1) } else { GraphClass::Other });
    }
    let adj = g.neighbours();
    let deg = |x: &i64| adj[x].len();
    if e == v {
        return Ok(if g.vertices.iter().all(|x| deg(x) == 2) {
            GraphClass::Euclidean(Family::A, v - 1)
        } else {
            GraphClass::Other
        });
    }
    if e + 1 != v {
        return Ok(GraphClass::Other);
    }
    let branch: Vec<i64> = g.vertices.iter().copied().filter(|x| deg(x) >= 3).collect();
    match branch.as_slice() {
        [] => Ok(GraphClass::Dynkin(Family::A, v)),
        [c] if deg(c) == 4 => Ok(if v == 5 { GraphClass::Euclidean(Family::D, 4) } else { GraphClass::Other }),
        [c] if deg(c) == 3 => {
            let arms = g.arms(*c, &adj);
            Ok(match arms.as_slice() {
                [1, 1, k] => GraphClass::Dynkin(Family::D, k + 3),
                [1, 2, 2] => GraphClass::Dynkin(Family::E, 6),
                [1, 2, 3] => GraphClass::Dynkin(Family::E, 7),
                [1, 2, 4] => GraphClass::Dynkin(Family::E, 8),
                [2, 2, 2] => GraphClass::Euclidean(Family::E, 6),
                [1, 3, 3] => GraphClass::Euclidean(Family::E, 7),
                [1, 2, 5] => GraphClass::Euclidean(Family::E, 8),
                _ => GraphClass::Other,
            })
        }
        [b1, b2] if deg(b1) == 3 && deg(b2) == 3 => {
            let leaves_ok = [b1, b2].iter().all(|b| adj[*b].iter().filter(|w| deg(w) == 1).count() == 2);
            Ok(if leaves_ok { GraphClass::Euclidean(Family::D, v - 1) } else { GraphClass::Other })
        }
        _ => Ok(GraphClass::Other),
    }
}

/// `g` with a fresh vertex (the largest label plus one) joined to `v`.
pub fn extension_graph(g: &MarkedGraph, v: i64) -> Result<MarkedGraph> {
    if !g.contains(v) {
        return Err(Error::UnknownVertex(v));
    }
    let x = g.vertices.iter().max().expect("nonempty") + 1;
    let mut vertices = g.vertices.clone();
    vertices.push(x);
    let mut edges = g.edges.clone();
    edges.push((v, x));
    MarkedGraph::new(vertices, edges)
}

/// Brute-force graph isomorphism with degree pruning.
pub fn graphs_isomorphic(g: &MarkedGraph, h: &MarkedGraph) -> bool {
    let n = g.vertices.len();
    if n != h.vertices.len() || g.edges.len() != h.edges.len() {
        return false;
    }
    let count = |gr: &MarkedGraph| {
        let idx: HashMap<i64, usize> = gr.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut m = vec![vec![0usize; n]; n];
        for &(a, b) in &gr.edges {
            let (i, j) = (idx[&a], idx[&b]);
            m[i][j] += 1;
            if i != j {
                m[j][i] += 1;
            }
        }
        m
    };
    let (a, b) = (count(g), count(h));
    let da: Vec<usize> = a.iter().map(|r| r.iter().sum()).collect();
    let db: Vec<usize> = b.iter().map(|r| r.iter().sum()).collect();
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    fn extend(i: usize, map: &mut Vec<usize>, used: &mut [bool], a: &[Vec<usize>], b: &[Vec<usize>], da: &[usize], db: &[usize]) -> bool {
        let n = a.len();
        if i == n {
            return true;
        }
        for j in 0..n {
            if used[j] || da[i] != db[j] || a[i][i] != b[j][j] {
                continue;
            }
            if (0..i).any(|k| a[i][k] != b[j][map[k]]) {
                continue;
            }
            used[j] = true;
            map.push(j);
            if extend(i + 1, map, used, a, b, da, db) {
                return true;
            }
            map.pop();
            used[j] = false;
        }
        false
    }
    extend(0, &mut Vec::new(), &mut vec![false; n], &a, &b, &da, &db)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub src: i64,
    pub tgt: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<i64>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<i64>, arrows: Vec<Arrow>) -> Result<Self> {
        let set: BTreeSet<i64> = vertices.iter().copied().collect();
        if set.len() != vertices.len() {
            return Err(Error::InvalidGraph("duplicate vertex label".into()));
        }
        let mut ids = BTreeSet::new();
        for a in &arrows {
            if !ids.insert(a.id.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate arrow id {:?}", a.id)));
            }
            for v in [a.src, a.tgt] {
                if !set.contains(&v) {
                    return Err(Error::UnknownVertex(v));
                }
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Convenience constructor from `(id, src, tgt)` triples.
    pub fn from_triples(vertices: Vec<i64>, arrows: &[(&str, i64, i64)]) -> Result<Self> {
        Self::new(
            vertices,
            arrows.iter().map(|&(id, src, tgt)| Arrow { id: id.to_string(), src, tgt }).collect(),
        )
    }

    pub fn vertices(&self) -> &[i64] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, v: i64) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn arrow(&self, id: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.id == id)
    }

    pub fn underlying_graph(&self) -> MarkedGraph {
        MarkedGraph::new(self.vertices.clone(), self.arrows.iter().map(|a| (a.src, a.tgt)).collect())
            .expect("quiver is valid")
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg: HashMap<i64, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for a in &self.arrows {
            *indeg.get_mut(&a.tgt).expect("vertex") += 1;
        }
        let mut queue: VecDeque<i64> = self.vertices.iter().copied().filter(|v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.src == v) {
                let d = indeg.get_mut(&a.tgt).expect("vertex");
                *d -= 1;
                if *d == 0 {
                    queue.push_back(a.tgt);
                }
            }
        }
        seen == self.vertices.len()
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph Q {\n");
        for v in &self.vertices {
            s.push_str(&format!("  {v};\n"));
        }
        for a in &self.arrows {
            s.push_str(&format!("  {} -> {} [label=\"{}\"];\n", a.src, a.tgt, a.id));
        }
        s.push_str("}\n");
        s
    }
}

/// Every orientation of `g`, with arrows `c0, c1, …` in edge order; the
/// first orientation points each edge `(a, b)` from `a` to `b`.
pub fn orientations(g: &MarkedGraph) -> Result<Vec<Quiver>> {
    let edges = g.edges();
    if edges.len() > 16 {
        return Err(Error::InvalidGraph("too many edges to enumerate orientations".into()));
    }
    (0..1usize << edges.len())
        .map(|mask| {
            let arrows = edges
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| {
                    let (src, tgt) = if mask >> k & 1 == 0 { (a, b) } else { (b, a) };
                    Arrow { id: format!("c{k}"), src, tgt }
                })
                .collect();
            Quiver::new(g.vertices().to_vec(), arrows)
        })
        .collect()
}

/// Vertices `1..n` stand for the original vertices in order, `n+1..2n` for
/// their primed copies; each arrow `i → j` becomes `i → j'`.
pub fn separated_quiver(q: &Quiver) -> Quiver {
    let n = q.vertices.len() as i64;
    let idx = |v: i64| q.vertex_index(v).expect("arrow endpoint") as i64 + 1;
    let arrows = q
        .arrows
        .iter()
        .map(|a| Arrow { id: a.id.clone(), src: idx(a.src), tgt: n + idx(a.tgt) })
        .collect();
    Quiver::new((1..=2 * n).collect(), arrows).expect("separated quiver is valid")
}

/// A shape `(Δ, f)`: `(Δ, 1)`, `(A_{mn}, 1/m)` or `(D_{3r}, 1/3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RFSyType {
    pub family: Family,
    pub rank: usize,
    /// `f = 1 / f_inv`.
    pub f_inv: usize,
    pub delta: MarkedGraph,
}

impl RFSyType {
    pub fn new(family: Family, rank: usize, f_inv: usize) -> Result<Self> {
        let delta = MarkedGraph::dynkin(family, rank)?;
        let bad = |why: &str| Err(Error::InvalidType(format!("({family}{rank}, 1/{f_inv}): {why}")));
        match (family, f_inv) {
            (_, 0) => return bad("f must be positive"),
            (_, 1) => {}
            (Family::A, m) if !rank.is_multiple_of(m) => return bad("rank must be a multiple of m"),
            (Family::A, _) => {}
            (Family::D, 3) if !rank.is_multiple_of(3) || rank < 6 => return bad("needs D_{3r} with r > 1"),
            (Family::D, 3) => {}
            _ => return bad("not one of the admissible shapes"),
        }
        Ok(RFSyType { family, rank, f_inv, delta })
    }

    /// Parses `f` given as `"1"` or `"1/m"`.
    pub fn parse_f(s: &str) -> Result<usize> {
        let s = s.trim();
        let bad = || Error::InvalidType(format!("f must be 1 or 1/m, got {s:?}"));
        if s == "1" {
            return Ok(1);
        }
        let rest = s.strip_prefix("1/").ok_or_else(bad)?;
        let m: usize = rest.parse().map_err(|_| bad())?;
        if m == 0 {
            return Err(bad());
        }
        Ok(m)
    }

    pub fn coxeter_number(&self) -> usize {
        coxeter_number(self.family, self.rank)
    }

    pub fn m_delta(&self) -> usize {
        self.coxeter_number() - 1
    }

    pub fn tau_period(&self) -> usize {
        let m = self.m_delta();
        assert_eq!(m % self.f_inv, 0, "tau period must be integral");
        m / self.f_inv
    }
}

impl fmt::Display for RFSyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f_inv == 1 {
            write!(f, "({}{}, 1)", self.family, self.rank)
        } else {
            write!(f, "({}{}, 1/{})", self.family, self.rank, self.f_inv)
        }
    }
}

pub fn coxeter_number(family: Family, n: usize) -> usize {
    match (family, n) {
        (Family::A, n) => n + 1,
        (Family::D, n) => 2 * n - 2,
        (Family::E, 6) => 12,
        (Family::E, 7) => 18,
        (Family::E, 8) => 30,
        _ => panic!("no Coxeter number for {family}{n}"),
    }
}

/// The non-trivial automorphism of a Dynkin graph in the standard labeling
/// (for `D_4`, the swap of `3` and `4`).
pub fn canonical_automorphism(family: Family, n: usize) -> Option<BTreeMap<i64, i64>> {
    let n = n as i64;
    let map: BTreeMap<i64, i64> = match family {
        Family::A if n >= 2 => (1..=n).map(|v| (v, n + 1 - v)).collect(),
        Family::D if n >= 4 => (1..=n).map(|v| (v, if v == n - 1 { n } else if v == n { n - 1 } else { v })).collect(),
        Family::E if n == 6 => [(1, 5), (2, 4), (3, 3), (4, 2), (5, 1), (6, 6)].into_iter().collect(),
        _ => return None,
    };
    Some(map)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    ValencyOneAEnd,
    LongestBranchTipD,
    Listed(i64),
}

pub fn vertex_by_convention(t: &RFSyType, role: VertexRole) -> Result<Vec<i64>> {
    match role {
        VertexRole::ValencyOneAEnd if t.family == Family::A => {
            let n = t.rank as i64;
            Ok(if n == 1 { vec![1] } else { vec![1, n] })
        }
        VertexRole::LongestBranchTipD if t.family == Family::D => Ok(vec![1]),
        VertexRole::Listed(v) if t.delta.contains(v) => Ok(vec![v]),
        VertexRole::Listed(v) => Err(Error::UnknownVertex(v)),
        other => Err(Error::IncompatibleRole(format!("{other:?} for {}{}", t.family, t.rank))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ext(family: Family, n: usize, v: i64) -> GraphClass {
        recognize(&extension_graph(&MarkedGraph::dynkin(family, n).unwrap(), v).unwrap()).unwrap()
    }

    #[test]
    fn basic_recognition() {
        assert_eq!(recognize(&MarkedGraph::path(1)).unwrap(), GraphClass::Dynkin(Family::A, 1));
        assert_eq!(recognize(&MarkedGraph::new(vec![], vec![]).unwrap()), Err(Error::EmptyGraph));
        for (f, n) in [(Family::A, 7), (Family::D, 4), (Family::D, 9), (Family::E, 6), (Family::E, 7), (Family::E, 8)] {
            assert_eq!(recognize(&MarkedGraph::dynkin(f, n).unwrap()).unwrap(), GraphClass::Dynkin(f, n));
        }
        let loop1 = MarkedGraph::new(vec![1], vec![(1, 1)]).unwrap();
        assert_eq!(recognize(&loop1).unwrap(), GraphClass::Euclidean(Family::A, 0));
        let kron = MarkedGraph::new(vec![1, 2], vec![(1, 2), (2, 1)]).unwrap();
        assert_eq!(recognize(&kron).unwrap(), GraphClass::Euclidean(Family::A, 1));
        let square = MarkedGraph::new(vec![1, 2, 3, 4], vec![(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(recognize(&square).unwrap(), GraphClass::Euclidean(Family::A, 3));
        let star = MarkedGraph::new(vec![0, 1, 2, 3, 4], vec![(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(recognize(&star).unwrap(), GraphClass::Euclidean(Family::D, 4));
        let d5 = MarkedGraph::new(vec![1, 2, 3, 4, 5, 6], vec![(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        assert_eq!(recognize(&d5).unwrap(), GraphClass::Euclidean(Family::D, 5));
        let split = MarkedGraph::new(vec![1, 2], vec![]).unwrap();
        assert_eq!(recognize(&split).unwrap(), GraphClass::Other);
    }

    #[test]
    fn extension_examples() {
        assert_eq!(ext(Family::A, 5, 3), GraphClass::Dynkin(Family::E, 6));
        assert_eq!(ext(Family::A, 7, 4), GraphClass::Euclidean(Family::E, 7));
        assert_eq!(ext(Family::A, 1, 1), GraphClass::Dynkin(Family::A, 2));
        assert_eq!(ext(Family::D, 5, 1), GraphClass::Dynkin(Family::D, 6));
        assert_eq!(ext(Family::D, 8, 7), GraphClass::Euclidean(Family::E, 8));
        assert_eq!(ext(Family::A, 8, 5), GraphClass::Other);
        assert!(extension_graph(&MarkedGraph::path(2), 9).is_err());
    }

    #[test]
    fn extension_of_a_paths_matches_arm_arithmetic() {
        for n in 1..=12usize {
            for v in 1..=n as i64 {
                let (a, b) = ((v - 1) as usize, n - v as usize);
                let (a, b) = (a.min(b), a.max(b));
                let expected = a <= 1 || (a == 2 && b <= 4);
                assert_eq!(ext(Family::A, n, v).is_dynkin(), expected, "A{n} at {v}");
            }
        }
    }

    #[test]
    fn separated_quiver_examples() {
        let kron = Quiver::from_triples(vec![1], &[("a", 1, 1), ("b", 1, 1)]).unwrap();
        let s = separated_quiver(&kron);
        assert_eq!(s.vertices(), &[1, 2]);
        assert_eq!(recognize(&s.underlying_graph()).unwrap(), GraphClass::Euclidean(Family::A, 1));
        let a2 = Quiver::from_triples(vec![1, 2], &[("a", 1, 2)]).unwrap();
        let s = separated_quiver(&a2);
        assert_eq!(s.arrows()[0], Arrow { id: "a".into(), src: 1, tgt: 4 });
        assert_eq!(s.underlying_graph().components().len(), 3);
    }

    #[test]
    fn rfsy_types() {
        let t = RFSyType::new(Family::A, 6, 2).unwrap();
        assert_eq!(t.tau_period(), 3);
        let t = RFSyType::new(Family::D, 9, 3).unwrap();
        assert_eq!(t.tau_period(), 5);
        assert!(RFSyType::new(Family::D, 3, 3).is_err());
        assert!(RFSyType::new(Family::A, 5, 2).is_err());
        assert!(RFSyType::new(Family::E, 6, 3).is_err());
        assert_eq!(RFSyType::new(Family::E, 8, 1).unwrap().coxeter_number(), 30);
        assert_eq!(RFSyType::parse_f("1/3").unwrap(), 3);
        assert!(RFSyType::parse_f("2/3").is_err());
    }

    #[test]
    fn labeling_conventions() {
        let d12 = RFSyType::new(Family::D, 12, 1).unwrap();
        assert_eq!(vertex_by_convention(&d12, VertexRole::LongestBranchTipD).unwrap(), vec![1]);
        let a6 = RFSyType::new(Family::A, 6, 1).unwrap();
        assert_eq!(vertex_by_convention(&a6, VertexRole::ValencyOneAEnd).unwrap(), vec![1, 6]);
        let e6 = RFSyType::new(Family::E, 6, 1).unwrap();
        assert_eq!(vertex_by_convention(&e6, VertexRole::Listed(5)).unwrap(), vec![5]);
        assert!(vertex_by_convention(&e6, VertexRole::LongestBranchTipD).is_err());
    }

    fn arb_quiver() -> impl Strategy<Value = Quiver> {
        (1usize..7).prop_flat_map(|n| {
            proptest::collection::vec((1..=n as i64, 1..=n as i64), 0..10).prop_map(move |edges| {
                let arrows = edges
                    .into_iter()
                    .enumerate()
                    .map(|(i, (s, t))| Arrow { id: format!("a{i}"), src: s, tgt: t })
                    .collect();
                Quiver::new((1..=n as i64).collect(), arrows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn recognition_ignores_labels(q in arb_quiver(), shift in 0i64..50, seed in any::<u64>()) {
            let g = q.underlying_graph();
            let mut labels: Vec<i64> = g.vertices().to_vec();
            let k = labels.len();
            for i in (1..k).rev() {
                labels.swap(i, (seed as usize >> (i % 16)) % (i + 1));
            }
            let perm: BTreeMap<i64, i64> = g.vertices().iter().zip(&labels).map(|(&a, &b)| (a, b * 3 + shift)).collect();
            let h = g.relabel(&perm);
            prop_assert_eq!(recognize(&g).unwrap(), recognize(&h).unwrap());
            prop_assert!(graphs_isomorphic(&g, &h));
        }

        #[test]
        fn separated_quiver_is_bipartite(q in arb_quiver()) {
            let n = q.vertices().len() as i64;
            let s = separated_quiver(&q);
            prop_assert_eq!(s.arrows().len(), q.arrows().len());
            for a in s.arrows() {
                prop_assert!(a.src <= n && a.tgt > n);
            }
        }
    }
}
