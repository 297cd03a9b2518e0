//! Morita context rings `[[A, U], [V, B]]` multiplied like matrices, and the
//! Auslander context `[[Λ, Hom(M,Λ)], [M, End M]]`.

use std::sync::Arc;

use crate::algebra::{AlgebraTable, QuiverAlgebra};
use crate::constructions::endo::endomorphism_algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{EchelonBasis, Matrix, SparseVec};
use crate::modules::{hom_space, ModuleMap, Representation};

/// A bimodule given by action matrices on a fixed basis.
#[derive(Clone, Debug)]
pub struct BimoduleData<F: Field> {
    pub dim: usize,
    /// `left[k]` sends `m` to `b_k · m`.
    pub left: Vec<Matrix<F>>,
    /// `right[k]` sends `m` to `m · b_k`.
    pub right: Vec<Matrix<F>>,
}

impl<F: Field> BimoduleData<F> {
    pub fn zero(left_dim: usize, right_dim: usize) -> Self {
        BimoduleData {
            dim: 0,
            left: vec![Matrix::zeros(0, 0); left_dim],
            right: vec![Matrix::zeros(0, 0); right_dim],
        }
    }

    /// Checks the action axioms against the two algebras.
    pub fn validate(&self, left: &AlgebraTable<F>, right: &AlgebraTable<F>) -> Result<()> {
        let bad = |s: &str| Err(Error::InvalidBimodule(s.into()));
        if self.left.len() != left.dim() || self.right.len() != right.dim() {
            return bad("one action matrix per basis element required");
        }
        if self.left.iter().chain(&self.right).any(|m| m.rows() != self.dim || m.cols() != self.dim) {
            return bad("action matrix has the wrong size");
        }
        let combine = |acts: &[Matrix<F>], v: &SparseVec<F>| {
            let mut m = Matrix::zeros(self.dim, self.dim);
            for (k, c) in v {
                m.add_scaled_assign(&acts[*k], c);
            }
            m
        };
        for i in 0..left.dim() {
            for j in 0..left.dim() {
                if self.left[i].mul(&self.left[j]) != combine(&self.left, left.mul_basis(i, j)) {
                    return bad("left action is not multiplicative");
                }
            }
        }
        for i in 0..right.dim() {
            for j in 0..right.dim() {
                if self.right[j].mul(&self.right[i]) != combine(&self.right, right.mul_basis(i, j)) {
                    return bad("right action is not multiplicative");
                }
            }
        }
        for l in &self.left {
            for r in &self.right {
                if l.mul(r) != r.mul(l) {
                    return bad("left and right actions do not commute");
                }
            }
        }
        Ok(())
    }
}

fn column_sparse<F: Field>(m: &Matrix<F>, c: usize, offset: usize) -> SparseVec<F> {
    (0..m.rows()).filter(|&r| !m[(r, c)].is_zero()).map(|r| (offset + r, m[(r, c)].clone())).collect()
}

fn shift<F: Field>(v: &[F], offset: usize) -> SparseVec<F> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (offset + k, c.clone())).collect()
}

/// `[[A, U], [V, B]]` with pairings `phi: U × V → A` and `psi: V × U → B`
/// given on basis pairs. Idempotents are those of `A` followed by those of `B`.
#[allow(clippy::too_many_arguments)]
pub fn morita_context_ring<F: Field>(
    a: &AlgebraTable<F>,
    b: &AlgebraTable<F>,
    u: &BimoduleData<F>,
    v: &BimoduleData<F>,
    phi: &[Vec<Vec<F>>],
    psi: &[Vec<Vec<F>>],
    vertices: Vec<i64>,
) -> Result<AlgebraTable<F>> {
    u.validate(a, b)?;
    v.validate(b, a)?;
    if phi.len() != u.dim || phi.iter().any(|r| r.len() != v.dim || r.iter().any(|x| x.len() != a.dim())) {
        return Err(Error::InvalidBimodule("phi must map U × V into A".into()));
    }
    if psi.len() != v.dim || psi.iter().any(|r| r.len() != u.dim || r.iter().any(|x| x.len() != b.dim())) {
        return Err(Error::InvalidBimodule("psi must map V × U into B".into()));
    }
    let (da, du, dv, db) = (a.dim(), u.dim, v.dim, b.dim());
    let (ou, ov, ob) = (da, da + du, da + du + dv);
    let d = ob + db;
    let mut mul = vec![vec![SparseVec::new(); d]; d];
    for i in 0..da {
        for j in 0..da {
            mul[i][j] = a.mul_basis(i, j).clone();
        }
        for s in 0..du {
            mul[i][ou + s] = column_sparse(&u.left[i], s, ou);
        }
        for t in 0..dv {
            mul[ov + t][i] = column_sparse(&v.right[i], t, ov);
        }
    }
    for j in 0..db {
        for k in 0..db {
            mul[ob + j][ob + k] = b.mul_basis(j, k).iter().map(|(x, c)| (ob + x, c.clone())).collect();
        }
        for s in 0..du {
            mul[ou + s][ob + j] = column_sparse(&u.right[j], s, ou);
        }
        for t in 0..dv {
            mul[ob + j][ov + t] = column_sparse(&v.left[j], t, ov);
        }
    }
    for s in 0..du {
        for t in 0..dv {
            mul[ou + s][ov + t] = shift(&phi[s][t], 0);
            mul[ov + t][ou + s] = shift(&psi[t][s], ob);
        }
    }
    let mut labels = a.labels().to_vec();
    labels.extend((0..du).map(|s| format!("u{s}")));
    labels.extend((0..dv).map(|t| format!("v{t}")));
    labels.extend(b.labels().iter().cloned());
    let mut idempotents = a.idempotents().to_vec();
    idempotents.extend(b.idempotents().iter().map(|e| ob + e));
    let table = AlgebraTable::new(
        labels,
        mul,
        idempotents,
        vertices,
        a.has_structural_radical() && b.has_structural_radical(),
        None,
    )?;
    table.check_associativity()?;
    Ok(table)
}

/// Triangular ring `[[A, U], [0, B]]`.
pub fn triangular_ring<F: Field>(
    a: &AlgebraTable<F>,
    b: &AlgebraTable<F>,
    u: &BimoduleData<F>,
    vertices: Vec<i64>,
) -> Result<AlgebraTable<F>> {
    let v = BimoduleData::zero(b.dim(), a.dim());
    let phi = vec![Vec::new(); u.dim];
    morita_context_ring(a, b, u, &v, &phi, &[], vertices)
}

/// The field as a one-vertex table.
pub fn ground_field<F: Field>(vertex: i64) -> AlgebraTable<F> {
    AlgebraTable::new(vec![format!("e{vertex}")], vec![vec![vec![(0, F::one())]]], vec![0], vec![vertex], true, Some(vec![0]))
        .expect("ground field")
}

/// One-point coextension `[[Λ, X], [0, K]]`, where the left `Λ`-module `X`
/// is given by the matrices `left[k]` of the basis elements.
pub fn one_point_coextension<F: Field>(lambda: &AlgebraTable<F>, left: Vec<Matrix<F>>, vertex: i64) -> Result<AlgebraTable<F>> {
    let dim = left.first().map_or(0, |m| m.rows());
    let u = BimoduleData { dim, left, right: vec![Matrix::identity(dim)] };
    let mut vertices = lambda.vertices().to_vec();
    vertices.push(vertex);
    triangular_ring(lambda, &ground_field(vertex), &u, vertices)
}

/// Positions of the regular module `⊕ P_i`: per vertex dimension and, for each
/// table element, its index in the space at its right vertex.
fn regular_positions<F: Field>(t: &AlgebraTable<F>) -> (Vec<usize>, Vec<usize>) {
    let n = t.num_vertices();
    let mut dims = vec![0; n];
    let mut local = vec![0; t.dim()];
    for i in 0..n {
        for k in (0..t.dim()).filter(|&k| t.block(k).0 == i) {
            let v = t.block(k).1;
            local[k] = dims[v];
            dims[v] += 1;
        }
    }
    (dims, local)
}

/// Left multiplication by the table element `b` as an endomorphism of the regular module.
fn left_mult<F: Field>(t: &AlgebraTable<F>, dims: &[usize], local: &[usize], b: usize) -> ModuleMap<F> {
    let mut blocks: Vec<Matrix<F>> = dims.iter().map(|&d| Matrix::zeros(d, d)).collect();
    for k in 0..t.dim() {
        let v = t.block(k).1;
        for (j, c) in t.mul_basis(b, k) {
            blocks[v][(local[*j], local[k])] = c.clone();
        }
    }
    ModuleMap { blocks }
}

fn projector<F: Field>(t: &AlgebraTable<F>, dims: &[usize], local: &[usize], i: usize) -> ModuleMap<F> {
    let mut blocks: Vec<Matrix<F>> = dims.iter().map(|&d| Matrix::zeros(d, d)).collect();
    for k in (0..t.dim()).filter(|&k| t.block(k).0 == i) {
        let v = t.block(k).1;
        blocks[v][(local[k], local[k])] = F::one();
    }
    ModuleMap { blocks }
}

fn coordinates_in<F: Field>(basis: &[Vec<F>], v: &[F]) -> Result<Vec<F>> {
    let n = v.len();
    Matrix::from_columns(basis, n).solve(v).ok_or_else(|| Error::InvalidBimodule("element outside the expected span".into()))
}

/// The Auslander context ring `[[Λ, Hom(M,Λ)], [M, End M]]` for an indecomposable `M`.
pub fn auslander_context<F: Field>(base: Arc<QuiverAlgebra<F>>, m: &Representation<F>) -> Result<AlgebraTable<F>> {
    let t = base.table();
    let n = base.num_vertices();
    let top = base.quiver().vertices().iter().copied().max().unwrap_or(0);
    let end = endomorphism_algebra(std::slice::from_ref(m), vec![top + 1])?;
    let e_maps: Vec<ModuleMap<F>> = end.basis.iter().map(|(_, _, f)| f.clone()).collect();
    let e_flat: Vec<Vec<F>> = e_maps.iter().map(ModuleMap::flatten).collect();

    let regular = Representation::regular(base.clone());
    let (rdims, local) = regular_positions(t);
    let mut at_vertex: Vec<Vec<usize>> = vec![vec![0; 0]; n];
    for v in 0..n {
        at_vertex[v] = vec![usize::MAX; rdims[v]];
    }
    for k in 0..t.dim() {
        at_vertex[t.block(k).1][local[k]] = k;
    }

    // U = Hom(M, Λ), adapted to the summands P_i of Λ.
    let homs = hom_space(m, &regular)?;
    let mut u_maps: Vec<ModuleMap<F>> = Vec::new();
    let mut seen = EchelonBasis::new(homs.first().map_or(0, |h| h.flatten().len()));
    for i in 0..n {
        let p = projector(t, &rdims, &local, i);
        for g in &homs {
            let h = p.compose(g);
            if seen.insert(h.flatten()) {
                u_maps.push(h);
            }
        }
    }
    let u_flat: Vec<Vec<F>> = u_maps.iter().map(ModuleMap::flatten).collect();
    let du = u_maps.len();
    let to_cols = |cols: Vec<Vec<F>>, rows: usize| Matrix::from_columns(&cols, rows);
    let u_left = (0..t.dim())
        .map(|b| {
            let l = left_mult(t, &rdims, &local, b);
            let cols = u_maps.iter().map(|g| coordinates_in(&u_flat, &l.compose(g).flatten())).collect::<Result<Vec<_>>>()?;
            Ok(to_cols(cols, du))
        })
        .collect::<Result<Vec<_>>>()?;
    let u_right = e_maps
        .iter()
        .map(|e| {
            let cols = u_maps.iter().map(|g| coordinates_in(&u_flat, &g.compose(e).flatten())).collect::<Result<Vec<_>>>()?;
            Ok(to_cols(cols, du))
        })
        .collect::<Result<Vec<_>>>()?;
    let u = BimoduleData { dim: du, left: u_left, right: u_right };

    // V = M with End M acting on the left and Λ on the right.
    let dv = m.dim();
    let offsets: Vec<usize> = m.dims().iter().scan(0, |acc, &d| {
        let o = *acc;
        *acc += d;
        Some(o)
    }).collect();
    let v_left: Vec<Matrix<F>> = e_maps.iter().map(ModuleMap::total_matrix).collect();
    let v_right: Vec<Matrix<F>> = (0..t.dim())
        .map(|k| {
            let (s, _) = t.block(k);
            let mut mat = Matrix::zeros(dv, dv);
            for c in 0..m.dims()[s] {
                let mut x = vec![F::zero(); m.dims()[s]];
                x[c] = F::one();
                let (tg, y) = m.act_basis(&x, k);
                for (r, val) in y.into_iter().enumerate() {
                    mat[(offsets[tg] + r, offsets[s] + c)] = val;
                }
            }
            mat
        })
        .collect();
    let v = BimoduleData { dim: dv, left: v_left, right: v_right };

    let vertex_of: Vec<(usize, usize)> = (0..n).flat_map(|w| (0..m.dims()[w]).map(move |c| (w, c))).collect();
    // phi(g, m_t) = g(m_t) ∈ Λ.
    let phi: Vec<Vec<Vec<F>>> = u_maps
        .iter()
        .map(|g| {
            vertex_of
                .iter()
                .map(|&(w, c)| {
                    let mut out = vec![F::zero(); t.dim()];
                    for (r, val) in g.blocks[w].column(c).into_iter().enumerate() {
                        out[at_vertex[w][r]] = val;
                    }
                    out
                })
                .collect()
        })
        .collect();
    // psi(m_t, g) = (x ↦ m_t · g(x)) ∈ End M.
    let psi: Vec<Vec<Vec<F>>> = vertex_of
        .iter()
        .map(|&(w, c)| {
            let mut mt = vec![F::zero(); m.dims()[w]];
            mt[c] = F::one();
            u_maps
                .iter()
                .map(|g| {
                    let blocks = (0..n)
                        .map(|x_v| {
                            let mut blk: Matrix<F> = Matrix::zeros(m.dims()[x_v], m.dims()[x_v]);
                            for col in 0..m.dims()[x_v] {
                                for (r, coeff) in g.blocks[x_v].column(col).into_iter().enumerate() {
                                    if coeff.is_zero() {
                                        continue;
                                    }
                                    let k = at_vertex[x_v][r];
                                    if t.block(k).0 != w {
                                        continue;
                                    }
                                    let (_, y) = m.act_basis(&mt, k);
                                    for (row, val) in y.into_iter().enumerate() {
                                        let cur = blk[(row, col)].clone();
                                        blk[(row, col)] = cur + coeff.clone() * val;
                                    }
                                }
                            }
                            blk
                        })
                        .collect();
                    coordinates_in(&e_flat, &ModuleMap { blocks }.flatten())
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut vertices = t.vertices().to_vec();
    vertices.push(top + 1);
    morita_context_ring(t, &end.table, &u, &v, &phi, &psi, vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fingerprint;
    use crate::constructions::endo::gendo_algebra;
    use crate::constructions::families::{modified_brauer_star, path_algebra};
    use crate::field::{Q, F2};
    use crate::graphs::Quiver;
    use crate::modules::zoo::{l_module, radical_of_projective};

    #[test]
    fn auslander_context_matches_direct_end() {
        let b = Arc::new(modified_brauer_star::<F2>(2, 0).unwrap());
        for m in [
            Representation::simple(b.clone(), 0),
            l_module(b.clone(), 1, 1).unwrap(),
            radical_of_projective(b.clone(), 2).unwrap(),
        ] {
            let ctx = auslander_context(b.clone(), &m).unwrap();
            let direct = gendo_algebra(b.clone(), &[m]).unwrap();
            assert_eq!(fingerprint(&ctx).unwrap(), fingerprint(&direct.gendo.table).unwrap());
            assert_eq!(fingerprint(&ctx.cut_at_vertices(&[1, 2]).unwrap()).unwrap(), fingerprint(b.table()).unwrap());
        }
    }

    #[test]
    fn coextension_by_a_simple() {
        let q = Quiver::from_triples(vec![1, 2], &[("a", 1, 2)]).unwrap();
        let kq = path_algebra::<Q>(&q).unwrap();
        let t = kq.table();
        // The left module K·e_1 (e_1 acts by 1, everything else by 0).
        let left: Vec<Matrix<Q>> = (0..t.dim())
            .map(|k| if k == t.idempotents()[0] { Matrix::identity(1) } else { Matrix::zeros(1, 1) })
            .collect();
        let c = one_point_coextension(t, left, 3).unwrap();
        c.validate().unwrap();
        c.validate().unwrap();
        assert_eq!(fingerprint(&c.cut_at_vertices(&[1, 2]).unwrap()).unwrap(), fingerprint(t).unwrap());
        assert_eq!(c.ext1_matrix().unwrap()[0][2], 1);
    }

    #[test]
    fn broken_pairing_is_reported_with_a_triple() {
        let q = Quiver::from_triples(vec![1], &[]).unwrap();
        let k = path_algebra::<Q>(&q).unwrap().into_table();
        let one = BimoduleData { dim: 1, left: vec![Matrix::identity(1)], right: vec![Matrix::identity(1)] };
        // phi = 1 and psi = 0 break phi(u,v)·u = u·psi(v,u).
        let phi = vec![vec![vec![Q::one()]]];
        let psi = vec![vec![vec![Q::zero()]]];
        let err = morita_context_ring(&k, &ground_field::<Q>(2), &one, &one, &phi, &psi, vec![1, 2]);
        assert!(matches!(err, Err(Error::Associativity(..)) | Err(Error::InvalidAlgebra(_))), "{err:?}");
    }
}
