//! Right modules over quiver algebras, given as representations.
//!
//! A vector at vertex `s` is a column; arrow `a: s → t` acts by the
//! `dims[t] × dims[s]` matrix `M_a`, so the path `ab` acts as `M_b M_a`.

pub mod iso;
pub mod orbit;
pub mod syzygy;
pub mod zoo;

use std::sync::Arc;

use crate::algebra::QuiverAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{EchelonBasis, Matrix, SparseEchelon, SparseVec};

pub use iso::{end_is_local, is_indecomposable, is_isomorphic, is_isomorphic_seeded, set_seed, Indecomposability};
pub use syzygy::{projective_cover, syzygy, tau};

#[derive(Clone, Debug)]
pub struct Representation<F: Field> {
    alg: Arc<QuiverAlgebra<F>>,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

/// Per-vertex linear maps commuting with the arrow actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap<F: Field> {
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> ModuleMap<F> {
    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        ModuleMap { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn add_scaled(&self, other: &Self, c: &F) -> Self {
        let mut out = self.clone();
        for (a, b) in out.blocks.iter_mut().zip(&other.blocks) {
            a.add_scaled_assign(b, c);
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        ModuleMap { blocks: self.blocks.iter().map(|b| b.scale(c)).collect() }
    }

    pub fn flatten(&self) -> Vec<F> {
        self.blocks.iter().flat_map(|b| b.data().iter().cloned()).collect()
    }

    /// Block-diagonal matrix on the total space.
    pub fn total_matrix(&self) -> Matrix<F> {
        Matrix::block_diag(&self.blocks)
    }
}

impl<F: Field> PartialEq for Representation<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.dims == other.dims && self.maps == other.maps
    }
}

impl<F: Field> Representation<F> {
    pub fn new(alg: Arc<QuiverAlgebra<F>>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.vertices().len() {
            return Err(Error::InvalidModule(format!("expected {} vertex dimensions", q.vertices().len())));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::InvalidModule(format!("expected {} arrow maps", q.arrows().len())));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            let s = q.vertex_index(a.src).expect("arrow source");
            let t = q.vertex_index(a.tgt).expect("arrow target");
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(Error::InvalidModule(format!("map for arrow {} has the wrong shape", a.id)));
            }
        }
        let rep = Representation { alg, dims, maps };
        rep.check_relations()?;
        Ok(rep)
    }

    /// Builds a representation from sparse matrix entries `(arrow id, row, col, value)`.
    pub fn from_entries(alg: Arc<QuiverAlgebra<F>>, dims: Vec<usize>, entries: &[(&str, usize, usize, F)]) -> Result<Self> {
        let q = alg.quiver();
        let mut maps: Vec<Matrix<F>> = q
            .arrows()
            .iter()
            .map(|a| {
                let s = q.vertex_index(a.src).expect("arrow source");
                let t = q.vertex_index(a.tgt).expect("arrow target");
                Matrix::zeros(dims.get(t).copied().unwrap_or(0), dims.get(s).copied().unwrap_or(0))
            })
            .collect();
        for (id, r, c, v) in entries {
            let a = q.arrow_index(id).ok_or_else(|| Error::UnknownArrow(id.to_string()))?;
            if *r >= maps[a].rows() || *c >= maps[a].cols() {
                return Err(Error::InvalidModule(format!("entry ({r},{c}) outside the map for {id}")));
            }
            maps[a][(*r, *c)] = v.clone();
        }
        Self::new(alg, dims, maps)
    }

    pub fn zero(alg: Arc<QuiverAlgebra<F>>) -> Self {
        let n = alg.num_vertices();
        Self::from_entries(alg, vec![0; n], &[]).expect("zero module")
    }

    pub fn simple(alg: Arc<QuiverAlgebra<F>>, i: usize) -> Self {
        let mut dims = vec![0; alg.num_vertices()];
        dims[i] = 1;
        Self::from_entries(alg, dims, &[]).expect("simple module")
    }

    /// `P_i = e_i A`; the basis at vertex `j` is the table basis of `e_i A e_j` in table order.
    pub fn projective(alg: Arc<QuiverAlgebra<F>>, i: usize) -> Self {
        let t = alg.table();
        let n = alg.num_vertices();
        let mut local = vec![usize::MAX; t.dim()];
        let mut dims = vec![0; n];
        for k in 0..t.dim() {
            let (l, r) = t.block(k);
            if l == i {
                local[k] = dims[r];
                dims[r] += 1;
            }
        }
        let q = alg.quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let s = q.vertex_index(a.src).expect("arrow source");
                let tg = q.vertex_index(a.tgt).expect("arrow target");
                let mut m = Matrix::zeros(dims[tg], dims[s]);
                for k in (0..t.dim()).filter(|&k| t.block(k) == (i, s)) {
                    for (r, c) in t.mul_basis(k, alg.arrow_element(ai)) {
                        m[(local[*r], local[k])] = c.clone();
                    }
                }
                m
            })
            .collect();
        Representation { alg, dims, maps }
    }

    /// The regular module `A_A = ⊕ P_i`.
    pub fn regular(alg: Arc<QuiverAlgebra<F>>) -> Self {
        let ps: Vec<_> = (0..alg.num_vertices()).map(|i| Self::projective(alg.clone(), i)).collect();
        Self::direct_sum(&ps).expect("same algebra")
    }

    pub fn direct_sum(parts: &[Self]) -> Result<Self> {
        let first = parts.first().ok_or(Error::ZeroModule)?;
        if parts.iter().any(|p| !p.same_algebra(first)) {
            return Err(Error::AlgebraMismatch);
        }
        let n = first.dims.len();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..first.maps.len())
            .map(|a| Matrix::block_diag(&parts.iter().map(|p| p.maps[a].clone()).collect::<Vec<_>>()))
            .collect();
        Ok(Representation { alg: first.alg.clone(), dims, maps })
    }

    pub fn algebra(&self) -> &Arc<QuiverAlgebra<F>> {
        &self.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || self.alg.presentation() == other.alg.presentation()
    }

    fn arrow_ends(&self, a: usize) -> (usize, usize) {
        let q = self.alg.quiver();
        let arrow = &q.arrows()[a];
        (q.vertex_index(arrow.src).expect("source"), q.vertex_index(arrow.tgt).expect("target"))
    }

    /// Matrix by which a word of arrows acts, starting at vertex position `start`.
    pub fn word_matrix(&self, start: usize, word: &[usize]) -> Matrix<F> {
        let mut m = Matrix::identity(self.dims[start]);
        for &a in word {
            m = self.maps[a].mul(&m);
        }
        m
    }

    pub fn check_relations(&self) -> Result<()> {
        for (ri, rel) in self.alg.relations().iter().enumerate() {
            let s = self.alg.vertex_position(rel.src).expect("relation source");
            let t = self.alg.vertex_position(rel.tgt).expect("relation target");
            let mut total = Matrix::zeros(self.dims[t], self.dims[s]);
            for (word, c) in &rel.terms {
                total.add_scaled_assign(&self.word_matrix(s, word), c);
            }
            if !total.is_zero() {
                return Err(Error::InvalidModule(format!("relation {ri} does not act by zero")));
            }
        }
        Ok(())
    }

    /// Action of the basis element `k` of the algebra table on `x ∈ M e_s`.
    pub fn act_basis(&self, x: &[F], k: usize) -> (usize, Vec<F>) {
        let t = self.alg.table();
        let (s, tg) = t.block(k);
        let word = &self.alg.words()[k];
        debug_assert_eq!(x.len(), self.dims[s]);
        (tg, self.word_matrix(s, word).mul_vec(x))
    }

    /// `M·J` per vertex.
    pub fn radical_spaces(&self) -> Vec<EchelonBasis<F>> {
        let mut spaces: Vec<EchelonBasis<F>> = self.dims.iter().map(|&d| EchelonBasis::new(d)).collect();
        for (a, m) in self.maps.iter().enumerate() {
            let (_, t) = self.arrow_ends(a);
            for c in 0..m.cols() {
                spaces[t].insert(m.column(c));
            }
        }
        spaces
    }

    /// Dimension vector of `top M = M/MJ`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces().iter().zip(&self.dims).map(|(r, d)| d - r.dim()).collect()
    }

    /// Per vertex, a basis of `soc M = {x : x·a = 0 for all arrows a}`.
    pub fn socle_spaces(&self) -> Vec<Vec<Vec<F>>> {
        (0..self.dims.len())
            .map(|v| {
                let outgoing: Vec<&Matrix<F>> =
                    self.maps.iter().enumerate().filter(|(a, _)| self.arrow_ends(*a).0 == v).map(|(_, m)| m).collect();
                let rows: Vec<Vec<F>> = outgoing.iter().flat_map(|m| (0..m.rows()).map(|r| m.row(r).to_vec())).collect();
                if rows.is_empty() {
                    (0..self.dims[v]).map(|k| unit(self.dims[v], k)).collect()
                } else {
                    Matrix::from_rows(rows, self.dims[v]).nullspace()
                }
            })
            .collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_spaces().iter().map(|s| s.len()).collect()
    }

    /// Radical layer dimensions `dim MJ^k / MJ^{k+1}`.
    pub fn loewy_layers(&self) -> Vec<usize> {
        let mut layers = Vec::new();
        let mut current: Vec<Vec<Vec<F>>> =
            self.dims.iter().map(|&d| (0..d).map(|k| unit(d, k)).collect()).collect();
        loop {
            let total: usize = current.iter().map(|v| v.len()).sum();
            if total == 0 {
                break;
            }
            let mut next: Vec<EchelonBasis<F>> = self.dims.iter().map(|&d| EchelonBasis::new(d)).collect();
            for (a, m) in self.maps.iter().enumerate() {
                let (s, t) = self.arrow_ends(a);
                for x in &current[s] {
                    next[t].insert(m.mul_vec(x));
                }
            }
            let next_total: usize = next.iter().map(|e| e.dim()).sum();
            layers.push(total - next_total);
            current = next.into_iter().map(|e| e.rows().to_vec()).collect();
        }
        layers
    }

    /// Submodule spanned per vertex by `basis[v]`, which must be closed under the arrows.
    pub fn submodule(&self, basis: &[Vec<Vec<F>>]) -> Result<Self> {
        let coords: Vec<EchelonBasis<F>> =
            basis.iter().zip(&self.dims).map(|(b, &d)| EchelonBasis::from_vectors(d, b)).collect();
        let dims: Vec<usize> = coords.iter().map(|c| c.dim()).collect();
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(a, m)| {
                let (s, t) = self.arrow_ends(a);
                let mut out = Matrix::zeros(dims[t], dims[s]);
                for (c, x) in coords[s].rows().iter().enumerate() {
                    let y = m.mul_vec(x);
                    let ys = coords[t]
                        .coordinates(&y)
                        .ok_or_else(|| Error::InvalidModule("subspace is not a submodule".into()))?;
                    for (r, v) in ys.into_iter().enumerate() {
                        out[(r, c)] = v;
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { alg: self.alg.clone(), dims, maps })
    }

    /// Quotient by the submodule spanned per vertex by `basis[v]`.
    pub fn quotient(&self, basis: &[Vec<Vec<F>>]) -> Result<Self> {
        let subs: Vec<EchelonBasis<F>> =
            basis.iter().zip(&self.dims).map(|(b, &d)| EchelonBasis::from_vectors(d, b)).collect();
        // Complement: unit vectors at non-pivot coordinates.
        let comps: Vec<Vec<usize>> = subs
            .iter()
            .zip(&self.dims)
            .map(|(s, &d)| (0..d).filter(|k| !s.pivots().contains(k)).collect())
            .collect();
        let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(a, m)| {
                let (s, t) = self.arrow_ends(a);
                let mut out = Matrix::zeros(dims[t], dims[s]);
                for (c, &k) in comps[s].iter().enumerate() {
                    let y = subs[t].reduce(m.column(k));
                    for (r, &kt) in comps[t].iter().enumerate() {
                        out[(r, c)] = y[kt].clone();
                    }
                }
                if subs[s].rows().iter().any(|x| !subs[t].contains(&m.mul_vec(x))) {
                    return Err(Error::InvalidModule("subspace is not a submodule".into()));
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.alg.clone(), dims, maps)
    }

    /// Representation over another copy of the same presentation.
    pub fn rebase(&self, alg: Arc<QuiverAlgebra<F>>) -> Result<Self> {
        if alg.presentation() != self.alg.presentation() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation { alg, dims: self.dims.clone(), maps: self.maps.clone() })
    }

    /// Identity endomorphism.
    pub fn identity_map(&self) -> ModuleMap<F> {
        ModuleMap { blocks: self.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    pub fn zero_map_to(&self, other: &Self) -> ModuleMap<F> {
        ModuleMap { blocks: self.dims.iter().zip(&other.dims).map(|(&s, &t)| Matrix::zeros(t, s)).collect() }
    }

    pub fn is_homomorphism_to(&self, other: &Self, f: &ModuleMap<F>) -> bool {
        self.maps.iter().enumerate().all(|(a, m)| {
            let (s, t) = self.arrow_ends(a);
            other.maps[a].mul(&f.blocks[s]) == f.blocks[t].mul(m)
        })
    }
}

fn unit<F: Field>(d: usize, k: usize) -> Vec<F> {
    let mut v = vec![F::zero(); d];
    v[k] = F::one();
    v
}

/// Basis of `Hom_A(m, n)`.
pub fn hom_space<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<Vec<ModuleMap<F>>> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let nv = m.dims.len();
    let mut offsets = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        offsets.push(total);
        total += m.dims[v] * n.dims[v];
    }
    // Unknown (v, r, c) is entry (r, c) of the block at v.
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dims[v] + c;
    let mut eqs: SparseEchelon<F> = SparseEchelon::new();
    for (a, ma) in m.maps.iter().enumerate() {
        let (s, t) = m.arrow_ends(a);
        let na = &n.maps[a];
        // N_a f_s - f_t M_a = 0
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row: SparseVec<F> = Vec::new();
                for k in 0..n.dims[s] {
                    if !na[(r, k)].is_zero() {
                        row.push((var(s, k, c), na[(r, k)].clone()));
                    }
                }
                for k in 0..m.dims[t] {
                    if !ma[(k, c)].is_zero() {
                        row.push((var(t, r, k), -ma[(k, c)].clone()));
                    }
                }
                if row.is_empty() {
                    continue;
                }
                row.sort_by_key(|(i, _)| *i);
                let mut merged: SparseVec<F> = Vec::with_capacity(row.len());
                for (i, x) in row {
                    match merged.last_mut() {
                        Some((li, lx)) if *li == i => *lx = lx.clone() + x,
                        _ => merged.push((i, x)),
                    }
                }
                merged.retain(|(_, x)| !x.is_zero());
                eqs.insert(merged);
            }
        }
    }
    eqs.finish();
    Ok(eqs
        .kernel(total)
        .into_iter()
        .map(|x| ModuleMap {
            blocks: (0..nv)
                .map(|v| {
                    let mut b = Matrix::zeros(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            b[(r, c)] = x[var(v, r, c)].clone();
                        }
                    }
                    b
                })
                .collect(),
        })
        .collect())
}

pub fn hom_dim<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

/// Trace of `M` in the regular module is everything.
pub fn is_generator<F: Field>(m: &Representation<F>) -> Result<bool> {
    let regular = Representation::regular(m.alg.clone());
    let maps = hom_space(m, &regular)?;
    let mut image: Vec<EchelonBasis<F>> = regular.dims.iter().map(|&d| EchelonBasis::new(d)).collect();
    for f in &maps {
        for (v, b) in f.blocks.iter().enumerate() {
            for c in 0..b.cols() {
                image[v].insert(b.column(c));
            }
        }
    }
    Ok(image.iter().zip(&regular.dims).all(|(e, &d)| e.dim() == d))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::{algebra_from_presentation, Presentation, Relation};
    use crate::field::Q;
    use crate::graphs::Quiver;

    /// Symmetric Nakayama algebra with two vertices and Loewy length 3.
    pub fn cyclic2() -> Arc<QuiverAlgebra<Q>> {
        let q = Quiver::from_triples(vec![1, 2], &[("a", 1, 2), ("b", 2, 1)]).unwrap();
        let p = Presentation::new(q, vec![Relation::zero(&["a", "b", "a"]), Relation::zero(&["b", "a", "b"])], 4).unwrap();
        Arc::new(algebra_from_presentation(&p).unwrap())
    }

    #[test]
    fn projectives_and_homs() {
        let alg = cyclic2();
        let p1 = Representation::projective(alg.clone(), 0);
        assert_eq!(p1.dims(), &[2, 1]);
        assert_eq!(p1.loewy_layers(), vec![1, 1, 1]);
        assert_eq!(p1.top_dims(), vec![1, 0]);
        assert_eq!(p1.socle_dims(), vec![1, 0]);
        let s1 = Representation::simple(alg.clone(), 0);
        assert_eq!(hom_dim(&s1, &s1).unwrap(), 1);
        let reg = Representation::regular(alg.clone());
        for m in [&p1, &s1, &reg] {
            for i in 0..2 {
                let pi = Representation::projective(alg.clone(), i);
                assert_eq!(hom_dim(&pi, m).unwrap(), m.dims()[i]);
            }
            for f in hom_space(m, &reg).unwrap() {
                assert!(m.is_homomorphism_to(&reg, &f));
            }
        }
    }

    #[test]
    fn generators() {
        let alg = cyclic2();
        assert!(is_generator(&Representation::regular(alg.clone())).unwrap());
        let s1 = Representation::simple(alg.clone(), 0);
        assert!(!is_generator(&s1).unwrap());
        let sum = Representation::direct_sum(&[Representation::regular(alg.clone()), s1]).unwrap();
        assert!(is_generator(&sum).unwrap());
    }

    #[test]
    fn relations_are_enforced() {
        let alg = cyclic2();
        let bad = Representation::from_entries(
            alg,
            vec![2, 1],
            &[("a", 0, 0, Q::one()), ("b", 1, 0, Q::one()), ("a", 0, 1, Q::one())],
        );
        assert!(matches!(bad, Err(Error::InvalidModule(_))));
    }

    #[test]
    fn sub_and_quotient() {
        let alg = cyclic2();
        let p1 = Representation::projective(alg.clone(), 0);
        let soc = p1.socle_spaces();
        let s = p1.submodule(&soc).unwrap();
        assert_eq!(s.dims(), &[1, 0]);
        let qt = p1.quotient(&soc).unwrap();
        assert_eq!(qt.dims(), &[1, 1]);
        assert_eq!(qt.loewy_layers(), vec![1, 1]);
    }
}
