//! Finite-dimensional basic algebras stored as structure-constant tables.
//!
//! Bases are always adapted to the chosen primitive idempotents: every
//! idempotent `e_i` is itself a basis element and every other basis element
//! `b` satisfies `b = e_i b e_j` for a unique pair `(i, j)`, its *block*.

pub mod fingerprint;
pub mod presentation;
pub mod symmetric;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{Arrow, Quiver};
use crate::linalg::{EchelonBasis, Matrix, SparseVec};

pub use fingerprint::{fingerprint, Fingerprint};
pub use presentation::{algebra_from_presentation, Path, Presentation, QuiverAlgebra, Relation};
pub use symmetric::is_symmetric;

#[derive(Clone, Debug)]
pub struct AlgebraTable<F: Field> {
    labels: Vec<String>,
    mul: Vec<Vec<SparseVec<F>>>,
    idempotents: Vec<usize>,
    vertices: Vec<i64>,
    structural_radical: bool,
    grading: Option<Vec<usize>>,
    blocks: Vec<(usize, usize)>,
    symmetric_form: OnceLock<Option<Vec<F>>>,
}

impl<F: Field> AlgebraTable<F> {
    /// Builds a table and checks the idempotent conditions.
    ///
    /// `structural_radical` asserts that the non-idempotent basis elements span
    /// the Jacobson radical; [`AlgebraTable::validate`] verifies it.
    pub fn new(
        labels: Vec<String>,
        mul: Vec<Vec<SparseVec<F>>>,
        idempotents: Vec<usize>,
        vertices: Vec<i64>,
        structural_radical: bool,
        grading: Option<Vec<usize>>,
    ) -> Result<Self> {
        let d = labels.len();
        let bad = |s: String| Err(Error::InvalidAlgebra(s));
        if mul.len() != d || mul.iter().any(|r| r.len() != d) {
            return bad(format!("multiplication table is not {d}x{d}"));
        }
        for row in &mul {
            for v in row {
                if v.iter().any(|(k, c)| *k >= d || c.is_zero()) || v.windows(2).any(|w| w[0].0 >= w[1].0) {
                    return bad("malformed structure constants".into());
                }
            }
        }
        if idempotents.is_empty() {
            return bad("no idempotents".into());
        }
        if vertices.len() != idempotents.len() {
            return bad("one vertex label per idempotent required".into());
        }
        if idempotents.iter().any(|&e| e >= d) || idempotents.iter().collect::<BTreeSet<_>>().len() != idempotents.len() {
            return bad("bad idempotent indices".into());
        }
        if let Some(g) = &grading {
            if g.len() != d {
                return bad("grading has wrong length".into());
            }
        }
        let unit_coeff = |v: &SparseVec<F>, k: usize| v.len() == 1 && v[0].0 == k && v[0].1.is_one();
        for (a, &ea) in idempotents.iter().enumerate() {
            for (b, &eb) in idempotents.iter().enumerate() {
                let p = &mul[ea][eb];
                let ok = if a == b { unit_coeff(p, ea) } else { p.is_empty() };
                if !ok {
                    return bad(format!("idempotents {a} and {b} are not orthogonal idempotents"));
                }
            }
        }
        let mut blocks = Vec::with_capacity(d);
        for k in 0..d {
            let left: Vec<usize> = (0..idempotents.len()).filter(|&i| !mul[idempotents[i]][k].is_empty()).collect();
            let right: Vec<usize> = (0..idempotents.len()).filter(|&j| !mul[k][idempotents[j]].is_empty()).collect();
            match (left.as_slice(), right.as_slice()) {
                ([i], [j]) if unit_coeff(&mul[idempotents[*i]][k], k) && unit_coeff(&mul[k][idempotents[*j]], k) => {
                    blocks.push((*i, *j))
                }
                _ => return bad(format!("basis element {} is not adapted to the idempotents", labels[k])),
            }
        }
        Ok(AlgebraTable {
            labels,
            mul,
            idempotents,
            vertices,
            structural_radical,
            grading,
            blocks,
            symmetric_form: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn vertices(&self) -> &[i64] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.idempotents.len()
    }

    pub fn grading(&self) -> Option<&[usize]> {
        self.grading.as_deref()
    }

    pub fn has_structural_radical(&self) -> bool {
        self.structural_radical
    }

    pub fn block(&self, k: usize) -> (usize, usize) {
        self.blocks[k]
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn is_idempotent_index(&self, k: usize) -> bool {
        self.idempotents.contains(&k)
    }

    pub fn vertex_position(&self, v: i64) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub(crate) fn symmetric_cache(&self) -> &OnceLock<Option<Vec<F>>> {
        &self.symmetric_form
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.mul[i][j]
    }

    pub fn basis_vec(&self, k: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[k] = F::one();
        v
    }

    pub fn unit(&self) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        for &e in &self.idempotents {
            v[e] = F::one();
        }
        v
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || self.blocks[i].1 != self.blocks[j].0 {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                for (k, v) in &self.mul[i][j] {
                    out[*k].add_mul_assign(&c, v);
                }
            }
        }
        out
    }

    /// `x * b_j`
    pub fn mul_by_basis(&self, x: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, v) in &self.mul[i][j] {
                out[*k].add_mul_assign(xi, v);
            }
        }
        out
    }

    /// `b_i * y`
    pub fn basis_mul(&self, i: usize, y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, v) in &self.mul[i][j] {
                out[*k].add_mul_assign(yj, v);
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y` acting on coordinate columns.
    pub fn left_mult_matrix(&self, x: &[F]) -> Matrix<F> {
        let d = self.dim();
        let cols: Vec<Vec<F>> = (0..d).map(|j| self.mul_by_basis(x, j)).collect();
        Matrix::from_columns(&cols, d)
    }

    pub fn check_associativity(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                if self.blocks[i].1 != self.blocks[j].0 {
                    continue;
                }
                let ij = &self.mul[i][j];
                for k in 0..d {
                    if self.blocks[j].1 != self.blocks[k].0 {
                        continue;
                    }
                    let mut left = vec![F::zero(); d];
                    for (t, c) in ij {
                        for (s, v) in &self.mul[*t][k] {
                            left[*s].add_mul_assign(c, v);
                        }
                    }
                    let mut right = vec![F::zero(); d];
                    for (t, c) in &self.mul[j][k] {
                        for (s, v) in &self.mul[i][*t] {
                            right[*s].add_mul_assign(c, v);
                        }
                    }
                    if left != right {
                        return Err(Error::Associativity(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Associativity plus nilpotency of the recorded radical.
    pub fn validate(&self) -> Result<()> {
        self.check_associativity()?;
        self.radical_powers()?;
        Ok(())
    }

    /// Basis vectors of the Jacobson radical.
    pub fn radical_vectors(&self) -> Result<Vec<Vec<F>>> {
        if self.structural_radical {
            Ok((0..self.dim()).filter(|k| !self.is_idempotent_index(*k)).map(|k| self.basis_vec(k)).collect())
        } else if F::CHARACTERISTIC == 0 {
            self.dickson_radical()
        } else {
            Err(Error::RadicalUnavailable)
        }
    }

    /// Radical as `{x : tr(L_{xy}) = 0 for all y}`; valid in characteristic zero.
    pub fn dickson_radical(&self) -> Result<Vec<Vec<F>>> {
        if F::CHARACTERISTIC != 0 {
            return Err(Error::RadicalUnavailable);
        }
        let d = self.dim();
        let traces: Vec<F> = (0..d)
            .map(|k| {
                let mut t = F::zero();
                for m in 0..d {
                    if let Some((_, c)) = self.mul[k][m].iter().find(|(s, _)| *s == m) {
                        t = t + c.clone();
                    }
                }
                t
            })
            .collect();
        let mut form = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let mut t = F::zero();
                for (k, c) in &self.mul[i][j] {
                    t.add_mul_assign(c, &traces[*k]);
                }
                form[(j, i)] = t;
            }
        }
        Ok(form.nullspace())
    }

    /// Bases of `J, J², …` up to the last nonzero power.
    pub fn radical_powers(&self) -> Result<Vec<Vec<Vec<F>>>> {
        let d = self.dim();
        let j1 = self.radical_vectors()?;
        let mut powers = Vec::new();
        let mut current = EchelonBasis::from_vectors(d, &j1).rows().to_vec();
        while !current.is_empty() {
            if powers.len() > d {
                return Err(Error::IdealNotNilpotent);
            }
            let mut next = EchelonBasis::new(d);
            for x in &current {
                for r in &j1 {
                    let p = self.mul(x, r);
                    if p.iter().any(|c| !c.is_zero()) {
                        next.insert(p);
                    }
                }
            }
            powers.push(std::mem::take(&mut current));
            current = next.rows().to_vec();
        }
        Ok(powers)
    }

    /// `[dim A/J, dim J/J², …]`
    pub fn radical_layer_dims(&self) -> Result<Vec<usize>> {
        let powers = self.radical_powers()?;
        let mut dims = vec![self.dim()];
        dims.extend(powers.iter().map(|p| p.len()));
        dims.push(0);
        Ok(dims.windows(2).map(|w| w[0] - w[1]).collect())
    }

    pub fn loewy_length(&self) -> Result<usize> {
        Ok(self.radical_powers()?.len() + 1)
    }

    fn block_restrict(&self, v: &[F], i: usize, j: usize) -> Vec<F> {
        v.iter()
            .enumerate()
            .map(|(k, c)| if self.blocks[k] == (i, j) { c.clone() } else { F::zero() })
            .collect()
    }

    /// `C[i][j] = dim e_i A e_j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut c = vec![vec![0; n]; n];
        for &(i, j) in &self.blocks {
            c[i][j] += 1;
        }
        c
    }

    /// `M[i][j] = dim e_i (J/J²) e_j`.
    pub fn ext1_matrix(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.num_vertices();
        let powers = self.radical_powers()?;
        let empty = Vec::new();
        let j1 = powers.first().unwrap_or(&empty);
        let j2 = powers.get(1).unwrap_or(&empty);
        let mut m = vec![vec![0; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let r1 = EchelonBasis::from_vectors(self.dim(), &j1.iter().map(|v| self.block_restrict(v, i, j)).collect::<Vec<_>>()).dim();
                let r2 = EchelonBasis::from_vectors(self.dim(), &j2.iter().map(|v| self.block_restrict(v, i, j)).collect::<Vec<_>>()).dim();
                *entry = r1 - r2;
            }
        }
        Ok(m)
    }

    /// Quiver with `dim e_i (J/J²) e_j` arrows `i → j`.
    pub fn ext1_quiver(&self) -> Result<Quiver> {
        let m = self.ext1_matrix()?;
        let mut arrows = Vec::new();
        for (i, row) in m.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                for t in 0..k {
                    arrows.push(Arrow {
                        id: format!("x{}_{}_{}", self.vertices[i], self.vertices[j], t),
                        src: self.vertices[i],
                        tgt: self.vertices[j],
                    });
                }
            }
        }
        Quiver::new(self.vertices.clone(), arrows)
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &[Vec<F>]) -> EchelonBasis<F> {
        let d = self.dim();
        let mut ideal = EchelonBasis::new(d);
        let mut queue: Vec<Vec<F>> = gens.to_vec();
        while let Some(v) = queue.pop() {
            let r = ideal.reduce(v.clone());
            if r.iter().all(|c| c.is_zero()) {
                continue;
            }
            ideal.insert(v.clone());
            for b in 0..d {
                let l = self.basis_mul(b, &v);
                if l.iter().any(|c| !c.is_zero()) {
                    queue.push(l);
                }
                let rt = self.mul_by_basis(&v, b);
                if rt.iter().any(|c| !c.is_zero()) {
                    queue.push(rt);
                }
            }
        }
        ideal
    }

    /// `A / I` for the two-sided ideal `I` generated by `gens`.
    pub fn quotient_by_ideal(&self, gens: &[Vec<F>]) -> Result<Self> {
        let d = self.dim();
        let ideal = self.ideal_closure(gens);
        let radical = EchelonBasis::from_vectors(d, &self.radical_vectors()?);
        if ideal.rows().iter().any(|v| !radical.contains(v)) {
            return Err(Error::IdealNotNilpotent);
        }
        let mut split = EchelonBasis::new(d);
        for v in ideal.rows() {
            let blocks: BTreeSet<(usize, usize)> =
                v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| self.blocks[k]).collect();
            for (i, j) in blocks {
                split.insert(self.block_restrict(v, i, j));
            }
        }
        let pivots: BTreeSet<usize> = split.pivots().iter().copied().collect();
        if self.idempotents.iter().any(|e| pivots.contains(e)) {
            return Err(Error::IdealNotNilpotent);
        }
        let keep: Vec<usize> = (0..d).filter(|k| !pivots.contains(k)).collect();
        let mut new_index = vec![usize::MAX; d];
        for (n, &k) in keep.iter().enumerate() {
            new_index[k] = n;
        }
        let mut mul = Vec::with_capacity(keep.len());
        for &a in &keep {
            let mut row = Vec::with_capacity(keep.len());
            for &b in &keep {
                let mut dense = vec![F::zero(); d];
                for (k, c) in &self.mul[a][b] {
                    dense[*k] = c.clone();
                }
                let reduced = split.reduce(dense);
                let sv: SparseVec<F> = reduced
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (new_index[k], c))
                    .collect();
                row.push(sv);
            }
            mul.push(row);
        }
        let homogeneous = self.grading.as_ref().is_some_and(|g| {
            split.rows().iter().all(|v| {
                let degs: BTreeSet<usize> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| g[k]).collect();
                degs.len() <= 1
            })
        });
        let grading = if homogeneous { self.grading.as_ref().map(|g| keep.iter().map(|&k| g[k]).collect()) } else { None };
        AlgebraTable::new(
            keep.iter().map(|&k| self.labels[k].clone()).collect(),
            mul,
            self.idempotents.iter().map(|&e| new_index[e]).collect(),
            self.vertices.clone(),
            self.structural_radical,
            grading,
        )
    }

    /// Corner algebra `eAe` for `e` the sum of the idempotents at the given vertex positions.
    pub fn idempotent_cut(&self, positions: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = positions.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::ZeroIdempotent);
        }
        if set.iter().any(|&p| p >= self.num_vertices()) {
            return Err(Error::Other(format!("idempotent position out of range (have {})", self.num_vertices())));
        }
        let keep: Vec<usize> =
            (0..self.dim()).filter(|&k| set.contains(&self.blocks[k].0) && set.contains(&self.blocks[k].1)).collect();
        let mut new_index = vec![usize::MAX; self.dim()];
        for (n, &k) in keep.iter().enumerate() {
            new_index[k] = n;
        }
        let mul = keep
            .iter()
            .map(|&a| keep.iter().map(|&b| self.mul[a][b].iter().map(|(k, c)| (new_index[*k], c.clone())).collect()).collect())
            .collect();
        let vpos: Vec<usize> = set.into_iter().collect();
        AlgebraTable::new(
            keep.iter().map(|&k| self.labels[k].clone()).collect(),
            mul,
            vpos.iter().map(|&p| new_index[self.idempotents[p]]).collect(),
            vpos.iter().map(|&p| self.vertices[p]).collect(),
            self.structural_radical,
            self.grading.as_ref().map(|g| keep.iter().map(|&k| g[k]).collect()),
        )
    }

    /// Corner algebra for a list of vertex labels.
    pub fn cut_at_vertices(&self, vertices: &[i64]) -> Result<Self> {
        let positions = vertices
            .iter()
            .map(|&v| self.vertex_position(v).ok_or(Error::UnknownVertex(v)))
            .collect::<Result<Vec<_>>>()?;
        self.idempotent_cut(&positions)
    }

    /// `A / J²`.
    pub fn radical_square_quotient(&self) -> Result<Self> {
        let powers = self.radical_powers()?;
        match powers.get(1) {
            Some(j2) => self.quotient_by_ideal(j2),
            None => Ok(self.clone()),
        }
    }

    /// Basis of `soc(e_i A) = {x ∈ e_i A : xJ = 0}`.
    pub fn socle_of_projective(&self, i: usize) -> Result<Vec<Vec<F>>> {
        let d = self.dim();
        let support: Vec<usize> = (0..d).filter(|&k| self.blocks[k].0 == i).collect();
        let radical = self.radical_vectors()?;
        let mut rows: Vec<Vec<F>> = Vec::new();
        for r in &radical {
            let images: Vec<Vec<F>> = support.iter().map(|&s| self.basis_mul(s, r)).collect();
            for coord in 0..d {
                if images.iter().any(|v| !v[coord].is_zero()) {
                    rows.push(images.iter().map(|v| v[coord].clone()).collect());
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..support.len())
                .map(|t| {
                    let mut v = vec![F::zero(); support.len()];
                    v[t] = F::one();
                    v
                })
                .collect()
        } else {
            Matrix::from_rows(rows, support.len()).nullspace()
        };
        Ok(kernel
            .into_iter()
            .map(|c| {
                let mut v = vec![F::zero(); d];
                for (s, x) in support.iter().zip(c) {
                    v[*s] = x;
                }
                v
            })
            .collect())
    }

    /// `A / soc(e_v A)` for the vertex label `v`.
    pub fn quotient_by_socle(&self, v: i64) -> Result<Self> {
        let i = self.vertex_position(v).ok_or(Error::UnknownVertex(v))?;
        let soc = self.socle_of_projective(i)?;
        self.quotient_by_ideal(&soc)
    }

    /// Same algebra with the basis reordered by `perm` (new index `k` is old `perm[k]`).
    pub fn permute_basis(&self, perm: &[usize]) -> Result<Self> {
        let d = self.dim();
        let mut inv = vec![0; d];
        for (n, &o) in perm.iter().enumerate() {
            inv[o] = n;
        }
        let mul = perm
            .iter()
            .map(|&a| {
                perm.iter()
                    .map(|&b| {
                        let mut v: SparseVec<F> = self.mul[a][b].iter().map(|(k, c)| (inv[*k], c.clone())).collect();
                        v.sort_by_key(|(k, _)| *k);
                        v
                    })
                    .collect()
            })
            .collect();
        AlgebraTable::new(
            perm.iter().map(|&k| self.labels[k].clone()).collect(),
            mul,
            self.idempotents.iter().map(|&e| inv[e]).collect(),
            self.vertices.clone(),
            self.structural_radical,
            self.grading.as_ref().map(|g| perm.iter().map(|&k| g[k]).collect()),
        )
    }

    /// Same algebra with the idempotents (and their vertex labels) listed in another order.
    pub fn reorder_vertices(&self, order: &[usize]) -> Result<Self> {
        let mut t = AlgebraTable::new(
            self.labels.clone(),
            self.mul.clone(),
            order.iter().map(|&p| self.idempotents[p]).collect(),
            order.iter().map(|&p| self.vertices[p]).collect(),
            self.structural_radical,
            self.grading.clone(),
        )?;
        t.symmetric_form = self.symmetric_form.clone();
        Ok(t)
    }

    pub fn with_vertex_labels(mut self, vertices: Vec<i64>) -> Result<Self> {
        if vertices.len() != self.num_vertices() {
            return Err(Error::InvalidAlgebra("vertex label count mismatch".into()));
        }
        self.vertices = vertices;
        Ok(self)
    }

    /// Whether the linear map `phi` (matrix sending basis `k` of `self` to column `k` in `other`)
    /// is an algebra isomorphism.
    pub fn is_isomorphism_via(&self, other: &Self, phi: &Matrix<F>) -> bool {
        let d = self.dim();
        if other.dim() != d || phi.rows() != d || phi.cols() != d || !phi.is_invertible() {
            return false;
        }
        let cols: Vec<Vec<F>> = (0..d).map(|k| phi.column(k)).collect();
        for i in 0..d {
            for j in 0..d {
                let mut lhs = vec![F::zero(); d];
                for (k, c) in &self.mul[i][j] {
                    for (t, x) in cols[*k].iter().enumerate() {
                        lhs[t].add_mul_assign(c, x);
                    }
                }
                if lhs != other.mul(&cols[i], &cols[j]) {
                    return false;
                }
            }
        }
        other.unit() == phi.mul_vec(&self.unit())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::field::{Q, F2};

    /// `K[x]/(x^k)`.
    pub fn truncated_poly<F: Field>(k: usize) -> AlgebraTable<F> {
        let mul = (0..k)
            .map(|i| (0..k).map(|j| if i + j < k { vec![(i + j, F::one())] } else { vec![] }).collect())
            .collect();
        AlgebraTable::new((0..k).map(|i| format!("x^{i}")).collect(), mul, vec![0], vec![1], true, Some((0..k).collect()))
            .unwrap()
    }

    /// `K × K`.
    pub fn two_points<F: Field>() -> AlgebraTable<F> {
        let mul = vec![vec![vec![(0, F::one())], vec![]], vec![vec![], vec![(1, F::one())]]];
        AlgebraTable::new(vec!["e1".into(), "e2".into()], mul, vec![0, 1], vec![1, 2], true, None).unwrap()
    }

    #[test]
    fn truncated_polynomial_radical() {
        let a: AlgebraTable<Q> = truncated_poly(3);
        a.validate().unwrap();
        assert_eq!(a.dickson_radical().unwrap().len(), 2);
        assert_eq!(a.radical_layer_dims().unwrap(), vec![1, 1, 1]);
        assert_eq!(a.loewy_length().unwrap(), 3);
        assert_eq!(a.ext1_matrix().unwrap(), vec![vec![1]]);
        let soc = a.socle_of_projective(0).unwrap();
        assert_eq!(soc, vec![a.basis_vec(2)]);
        assert_eq!(a.quotient_by_socle(1).unwrap().dim(), 2);
    }

    #[test]
    fn semisimple_pieces() {
        let a: AlgebraTable<Q> = two_points();
        assert!(a.dickson_radical().unwrap().is_empty());
        assert_eq!(a.cartan_matrix(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(a.idempotent_cut(&[1]).unwrap().dim(), 1);
        assert_eq!(a.idempotent_cut(&[]).unwrap_err(), Error::ZeroIdempotent);
        assert_eq!(a.quotient_by_ideal(&[a.basis_vec(0)]).unwrap_err(), Error::IdealNotNilpotent);
    }

    #[test]
    fn radical_needs_metadata_in_positive_characteristic() {
        let a: AlgebraTable<F2> = truncated_poly(2);
        let mut b = a.clone();
        b.structural_radical = false;
        assert_eq!(b.radical_vectors().unwrap_err(), Error::RadicalUnavailable);
        assert_eq!(a.radical_vectors().unwrap().len(), 1);
    }

    #[test]
    fn rejects_non_associative_table() {
        let mut a: AlgebraTable<Q> = truncated_poly(3);
        assert!(a.check_associativity().is_ok());
        // x²·x = x² while x·x² = 0
        a.mul[2][1] = vec![(2, Q::one())];
        assert!(matches!(a.check_associativity(), Err(Error::Associativity(..))));
    }
}
