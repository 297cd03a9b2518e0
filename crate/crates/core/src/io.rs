//! JSON formats for graphs, quivers, presentations, algebra tables and
//! modules. Every parser caps input size before allocating.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraTable, Presentation, QuiverAlgebra, Relation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{Arrow, MarkedGraph, Quiver};
use crate::linalg::{Matrix, SparseVec};
use crate::modules::Representation;

pub const MAX_INPUT_BYTES: usize = 16 << 20;
pub const MAX_VERTICES: usize = 1024;
pub const MAX_ARROWS: usize = 4096;
pub const MAX_RELATIONS: usize = 4096;
pub const MAX_PATH_LEN: usize = 64;
pub const MAX_ALGEBRA_DIM: usize = 2048;
pub const MAX_MODULE_DIM: usize = 4096;
pub const MAX_TRUNCATION: usize = 64;

fn too_big(what: &str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Parse(format!("{what} {n} exceeds the limit {cap}")));
    }
    Ok(())
}

fn read<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    too_big("input size", s.len(), MAX_INPUT_BYTES)?;
    Ok(serde_json::from_str(s)?)
}

fn write<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

/// Scalars are written as strings; plain integers are accepted on input.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn of<F: Field>(c: &F) -> Self {
        Scalar::Text(c.to_string())
    }

    fn value<F: Field>(&self) -> Result<F> {
        match self {
            Scalar::Int(v) => Ok(F::from_i64(*v)),
            Scalar::Text(s) => F::parse(s),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: Vec<i64>,
    edges: Vec<(i64, i64)>,
}

pub fn graph_to_json(g: &MarkedGraph) -> String {
    write(&GraphJson { vertices: g.vertices().to_vec(), edges: g.edges().to_vec() })
}

pub fn graph_from_json(s: &str) -> Result<MarkedGraph> {
    let g: GraphJson = read(s)?;
    too_big("vertex count", g.vertices.len(), MAX_VERTICES)?;
    too_big("edge count", g.edges.len(), MAX_ARROWS)?;
    MarkedGraph::new(g.vertices, g.edges)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowJson {
    id: String,
    src: i64,
    tgt: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverJson {
    vertices: Vec<i64>,
    arrows: Vec<ArrowJson>,
}

impl QuiverJson {
    fn of(q: &Quiver) -> Self {
        QuiverJson {
            vertices: q.vertices().to_vec(),
            arrows: q.arrows().iter().map(|a| ArrowJson { id: a.id.clone(), src: a.src, tgt: a.tgt }).collect(),
        }
    }

    fn build(self) -> Result<Quiver> {
        too_big("vertex count", self.vertices.len(), MAX_VERTICES)?;
        too_big("arrow count", self.arrows.len(), MAX_ARROWS)?;
        if self.arrows.iter().any(|a| a.id.is_empty() || a.id.len() > 64) {
            return Err(Error::Parse("arrow ids must have 1 to 64 characters".into()));
        }
        Quiver::new(self.vertices, self.arrows.into_iter().map(|a| Arrow { id: a.id, src: a.src, tgt: a.tgt }).collect())
    }
}

pub fn quiver_to_json(q: &Quiver) -> String {
    write(&QuiverJson::of(q))
}

pub fn quiver_from_json(s: &str) -> Result<Quiver> {
    read::<QuiverJson>(s)?.build()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    path: Vec<String>,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationJson {
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationJson {
    quiver: QuiverJson,
    relations: Vec<RelationJson>,
    #[serde(rename = "L")]
    truncation: usize,
}

pub fn presentation_to_json<F: Field>(p: &Presentation<F>) -> String {
    write(&PresentationJson {
        quiver: QuiverJson::of(&p.quiver),
        relations: p
            .relations
            .iter()
            .map(|r| RelationJson {
                terms: r.terms.iter().map(|(path, c)| TermJson { path: path.clone(), coeff: Scalar::of(c) }).collect(),
            })
            .collect(),
        truncation: p.truncation,
    })
}

pub fn presentation_from_json<F: Field>(s: &str) -> Result<Presentation<F>> {
    let p: PresentationJson = read(s)?;
    too_big("relation count", p.relations.len(), MAX_RELATIONS)?;
    too_big("truncation", p.truncation, MAX_TRUNCATION)?;
    let quiver = p.quiver.build()?;
    let mut relations = Vec::with_capacity(p.relations.len());
    for r in p.relations {
        too_big("term count", r.terms.len(), MAX_RELATIONS)?;
        let mut terms = Vec::with_capacity(r.terms.len());
        for t in r.terms {
            too_big("path length", t.path.len(), MAX_PATH_LEN)?;
            terms.push((t.path, t.coeff.value::<F>()?));
        }
        relations.push(Relation { terms });
    }
    Presentation::new(quiver, relations, p.truncation)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraJson {
    field: String,
    dim: usize,
    basis: Vec<String>,
    /// `mul[i][j]` lists `[k, c]` for the nonzero coefficients of `b_i b_j`.
    mul: Vec<Vec<Vec<(usize, Scalar)>>>,
    idempotents: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<i64>>,
    /// Basis elements spanning the radical, when the basis is structural.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    radical: Option<Vec<usize>>,
}

pub fn algebra_to_json<F: Field>(a: &AlgebraTable<F>) -> String {
    let d = a.dim();
    write(&AlgebraJson {
        field: F::NAME.into(),
        dim: d,
        basis: a.labels().to_vec(),
        mul: (0..d)
            .map(|i| (0..d).map(|j| a.mul_basis(i, j).iter().map(|(k, c)| (*k, Scalar::of(c))).collect()).collect())
            .collect(),
        idempotents: a.idempotents().to_vec(),
        vertices: Some(a.vertices().to_vec()),
        radical: a.has_structural_radical().then(|| (0..d).filter(|&k| !a.is_idempotent_index(k)).collect()),
    })
}

/// Reads a table and checks associativity; the field tag must match `F`.
pub fn algebra_from_json<F: Field>(s: &str) -> Result<AlgebraTable<F>> {
    let a: AlgebraJson = read(s)?;
    if a.field != F::NAME {
        return Err(Error::Parse(format!("field {:?} does not match {}", a.field, F::NAME)));
    }
    let d = a.dim;
    too_big("algebra dimension", d, MAX_ALGEBRA_DIM)?;
    if a.basis.len() != d || a.mul.len() != d || a.mul.iter().any(|row| row.len() != d) {
        return Err(Error::Parse(format!("basis and multiplication table must have dimension {d}")));
    }
    let mut mul = Vec::with_capacity(d);
    for row in a.mul {
        let mut out = Vec::with_capacity(d);
        for entry in row {
            let mut v: SparseVec<F> = Vec::with_capacity(entry.len());
            for (k, c) in entry {
                if k >= d {
                    return Err(Error::Parse(format!("basis index {k} out of range")));
                }
                let c = c.value::<F>()?;
                if !c.is_zero() {
                    v.push((k, c));
                }
            }
            v.sort_by_key(|e| e.0);
            if v.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::Parse("repeated basis index in a product".into()));
            }
            out.push(v);
        }
        mul.push(out);
    }
    let vertices = a.vertices.unwrap_or_else(|| (1..=a.idempotents.len() as i64).collect());
    let structural = match &a.radical {
        None => false,
        Some(r) => {
            let mut r = r.clone();
            r.sort_unstable();
            let expected: Vec<usize> = (0..d).filter(|k| !a.idempotents.contains(k)).collect();
            if r != expected {
                return Err(Error::Parse("radical must list exactly the non-idempotent basis elements".into()));
            }
            true
        }
    };
    let table = AlgebraTable::new(a.basis, mul, a.idempotents, vertices, structural, None)?;
    table.check_associativity()?;
    if structural {
        for i in 0..d {
            for k in (0..d).filter(|&k| !table.is_idempotent_index(k)) {
                let leaks = |v: &SparseVec<F>| v.iter().any(|(t, _)| table.is_idempotent_index(*t));
                if leaks(table.mul_basis(i, k)) || leaks(table.mul_basis(k, i)) {
                    return Err(Error::Parse("radical is not a two-sided ideal".into()));
                }
            }
        }
        table.radical_powers()?;
    }
    Ok(table)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleJson {
    /// Free-form reference to the algebra, e.g. a file name or recipe.
    algebra: String,
    dims: BTreeMap<String, usize>,
    maps: BTreeMap<String, Vec<Vec<Scalar>>>,
}

pub fn module_to_json<F: Field>(m: &Representation<F>, algebra: &str) -> String {
    let q = m.algebra().quiver();
    write(&ModuleJson {
        algebra: algebra.into(),
        dims: q.vertices().iter().zip(m.dims()).map(|(v, d)| (v.to_string(), *d)).collect(),
        maps: q
            .arrows()
            .iter()
            .zip(m.maps())
            .map(|(a, mat)| (a.id.clone(), (0..mat.rows()).map(|r| mat.row(r).iter().map(Scalar::of).collect()).collect()))
            .collect(),
    })
}

/// Reads a module over `alg`; missing dimensions default to zero, missing
/// maps to zero maps, and the relations are checked.
pub fn module_from_json<F: Field>(s: &str, alg: Arc<QuiverAlgebra<F>>) -> Result<Representation<F>> {
    let m: ModuleJson = read(s)?;
    let q = alg.quiver();
    let mut dims = vec![0; q.vertices().len()];
    for (key, d) in &m.dims {
        let v: i64 = key.parse().map_err(|_| Error::Parse(format!("vertex key {key:?} is not an integer")))?;
        let i = q.vertex_index(v).ok_or(Error::UnknownVertex(v))?;
        dims[i] = *d;
    }
    too_big("module dimension", dims.iter().try_fold(0usize, |a, &d| a.checked_add(d)).unwrap_or(usize::MAX), MAX_MODULE_DIM)?;
    let mut maps: Vec<Matrix<F>> = q
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(dims[q.vertex_index(a.tgt).unwrap()], dims[q.vertex_index(a.src).unwrap()]))
        .collect();
    for (id, rows) in &m.maps {
        let k = q.arrow_index(id).ok_or_else(|| Error::UnknownArrow(id.clone()))?;
        let (r, c) = (maps[k].rows(), maps[k].cols());
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse(format!("map for arrow {id} must be {r}x{c}")));
        }
        let values = rows.iter().map(|row| row.iter().map(Scalar::value::<F>).collect::<Result<Vec<F>>>()).collect::<Result<_>>()?;
        maps[k] = Matrix::from_rows(values, c);
    }
    Representation::new(alg, dims, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::algebra_from_presentation;
    use crate::constructions::families::{modified_brauer_star, nakayama};
    use crate::field::{Q, F2};
    use crate::modules::zoo::d_module;

    #[test]
    fn graph_and_quiver_round_trip() {
        let g = MarkedGraph::dynkin(crate::graphs::Family::D, 5).unwrap();
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
        let q = Quiver::from_triples(vec![1, 2, 3], &[("a", 1, 2), ("b", 2, 3), ("c", 3, 3)]).unwrap();
        assert_eq!(quiver_from_json(&quiver_to_json(&q)).unwrap(), q);
    }

    #[test]
    fn presentation_round_trip_rebuilds_the_algebra() {
        let b = modified_brauer_star::<F2>(2, 1).unwrap();
        let p = presentation_from_json::<F2>(&presentation_to_json(b.presentation())).unwrap();
        assert_eq!(&p, b.presentation());
        assert_eq!(algebra_from_presentation(&p).unwrap().table().dim(), 10);
    }

    #[test]
    fn algebra_round_trip() {
        let n = nakayama::<Q>(2, 2).unwrap();
        let json = algebra_to_json(n.table());
        let back = algebra_from_json::<Q>(&json).unwrap();
        assert_eq!(back.dim(), 10);
        assert_eq!(algebra_to_json(&back), json);
        assert!(algebra_from_json::<F2>(&json).is_err());
    }

    #[test]
    fn module_round_trip() {
        let b = Arc::new(modified_brauer_star::<Q>(3, 0).unwrap());
        let d = d_module(b.clone()).unwrap();
        let back = module_from_json(&module_to_json(&d, "mbs n=3"), b).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(graph_from_json(r#"{"vertices":[1],"edges":[[1,2]]}"#).is_err());
        assert!(graph_from_json(r#"{"vertices":[1],"edges":[],"extra":0}"#).is_err());
        assert!(quiver_from_json(r#"{"vertices":[1,1],"arrows":[]}"#).is_err());
        let b = Arc::new(nakayama::<Q>(1, 2).unwrap());
        assert!(module_from_json(r#"{"algebra":"x","dims":{"1":1},"maps":{"b1":[["1"]]}}"#, b.clone()).is_err());
        assert!(module_from_json(r#"{"algebra":"x","dims":{"7":1},"maps":{}}"#, b).is_err());
        assert!(algebra_from_json::<Q>(r#"{"field":"Q","dim":99999,"basis":[],"mul":[],"idempotents":[]}"#).is_err());
        let unit_radical = r#"{"field":"Q","dim":2,"basis":["e1","x"],"mul":[[[[0,1]],[[1,1]]],[[[1,1]],[[0,1]]]],"idempotents":[0],"radical":[1]}"#;
        assert!(algebra_from_json::<Q>(unit_radical).is_err());
        assert!(algebra_from_json::<Q>(&unit_radical.replace(r#","radical":[1]"#, "")).is_ok());
    }
}
