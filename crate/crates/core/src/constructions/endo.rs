//! Endomorphism algebras of direct sums, computed from Hom spaces, and gendo
//! triples `(End_Λ(Λ ⊕ M), Λ ⊕ M, Λ)`.

use std::sync::Arc;

use crate::algebra::symmetric::is_symmetric;
use crate::algebra::{AlgebraTable, QuiverAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, SparseVec};
use crate::modules::{end_is_local, hom_space, is_generator, is_isomorphic, ModuleMap, Representation};

/// Solves for coordinates of vectors known to lie in a fixed span.
struct Coordinates<F: Field> {
    rows: Vec<usize>,
    inverse: Matrix<F>,
}

impl<F: Field> Coordinates<F> {
    fn new(basis: &[Vec<F>]) -> Result<Self> {
        let k = basis.len();
        if k == 0 {
            return Ok(Coordinates { rows: vec![], inverse: Matrix::zeros(0, 0) });
        }
        let n = basis[0].len();
        let (_, pivots) = Matrix::from_rows(basis.to_vec(), n).rref();
        if pivots.len() != k {
            return Err(Error::Other("Hom basis is not linearly independent".into()));
        }
        let square = Matrix::from_rows(pivots.iter().map(|&p| basis.iter().map(|b| b[p].clone()).collect()).collect(), k);
        let inverse = square.inverse().expect("pivot minor is invertible");
        Ok(Coordinates { rows: pivots, inverse })
    }

    fn of(&self, v: &[F]) -> Vec<F> {
        let picked: Vec<F> = self.rows.iter().map(|&r| v[r].clone()).collect();
        self.inverse.mul_vec(&picked)
    }
}

/// `End(X_1 ⊕ ⋯ ⊕ X_r)` for pairwise non-isomorphic indecomposables with
/// local endomorphism rings. The product is composition, `f·g = f ∘ g`, so
/// `e_i Γ e_j = Hom(X_j, X_i)`.
#[derive(Clone, Debug)]
pub struct EndAlgebra<F: Field> {
    pub table: AlgebraTable<F>,
    pub summands: Vec<Representation<F>>,
    /// `(i, j, f)` with `f: X_j → X_i` for every basis element.
    pub basis: Vec<(usize, usize, ModuleMap<F>)>,
}

pub fn endomorphism_algebra<F: Field>(summands: &[Representation<F>], vertices: Vec<i64>) -> Result<EndAlgebra<F>> {
    let r = summands.len();
    if r == 0 {
        return Err(Error::ZeroModule);
    }
    if vertices.len() != r {
        return Err(Error::InvalidAlgebra("one vertex label per summand required".into()));
    }
    let first = &summands[0];
    if summands.iter().any(|s| !s.same_algebra(first)) {
        return Err(Error::AlgebraMismatch);
    }
    let mut blocks: Vec<Vec<Vec<ModuleMap<F>>>> = vec![vec![Vec::new(); r]; r];
    for i in 0..r {
        for j in 0..r {
            blocks[i][j] = if i == j {
                let rad = end_is_local(&summands[i])?
                    .ok_or_else(|| Error::InvalidModule(format!("summand {i} is not indecomposable with local End")))?;
                std::iter::once(summands[i].identity_map()).chain(rad).collect()
            } else {
                hom_space(&summands[j], &summands[i])?
            };
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            if summands[i].dims() == summands[j].dims() && is_isomorphic(&summands[i], &summands[j])? {
                return Err(Error::InvalidModule(format!("summands {i} and {j} are isomorphic")));
            }
        }
    }
    table_from_blocks(summands, &blocks, vertices)
}

/// Assembles the table from Hom bases `blocks[i][j] ⊆ Hom(X_j, X_i)`; each
/// diagonal block must start with the identity followed by radical maps.
pub(crate) fn table_from_blocks<F: Field>(
    summands: &[Representation<F>],
    blocks: &[Vec<Vec<ModuleMap<F>>>],
    vertices: Vec<i64>,
) -> Result<EndAlgebra<F>> {
    let r = summands.len();
    let mut basis = Vec::new();
    let mut offset = vec![vec![0; r]; r];
    for i in 0..r {
        for j in 0..r {
            offset[i][j] = basis.len();
            basis.extend(blocks[i][j].iter().cloned().map(|f| (i, j, f)));
        }
    }
    let coords: Vec<Vec<Coordinates<F>>> = blocks
        .iter()
        .map(|row| row.iter().map(|b| Coordinates::new(&b.iter().map(ModuleMap::flatten).collect::<Vec<_>>())).collect())
        .collect::<Result<_>>()?;
    let d = basis.len();
    let mut mul = vec![vec![SparseVec::new(); d]; d];
    for (x, (i, j, f)) in basis.iter().enumerate() {
        for (y, (k, l, g)) in basis.iter().enumerate() {
            if j != k {
                continue;
            }
            let h = f.compose(g).flatten();
            if h.iter().all(|c| c.is_zero()) {
                continue;
            }
            mul[x][y] = coords[*i][*l]
                .of(&h)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(t, c)| (offset[*i][*l] + t, c))
                .collect();
        }
    }
    let labels = basis
        .iter()
        .enumerate()
        .map(|(x, (i, j, _))| {
            let t = x - offset[*i][*j];
            if i == j && t == 0 {
                format!("e{}", vertices[*i])
            } else {
                format!("f{}_{}_{t}", vertices[*i], vertices[*j])
            }
        })
        .collect();
    let idempotents = (0..r).map(|i| offset[i][i]).collect();
    let table = AlgebraTable::new(labels, mul, idempotents, vertices, true, None)?;
    Ok(EndAlgebra { table, summands: summands.to_vec(), basis })
}

/// A gendo algebra `Γ = End_Λ(Λ ⊕ M)` with its generator and base algebra.
#[derive(Clone, Debug)]
pub struct GendoTriple<F: Field> {
    pub gendo: EndAlgebra<F>,
    pub generator: Representation<F>,
    pub base: Arc<QuiverAlgebra<F>>,
    pub gendo_symmetric: bool,
}

impl<F: Field> GendoTriple<F> {
    /// Vertex label of the `k`-th added summand.
    pub fn extra_vertex(&self, k: usize) -> i64 {
        self.gendo.table.vertices()[self.base.num_vertices() + k]
    }
}

/// `End_Λ(Λ ⊕ M_1 ⊕ ⋯)`; vertices of `Λ` keep their labels and the added
/// summands get consecutive labels after the largest one.
pub fn gendo_algebra<F: Field>(base: Arc<QuiverAlgebra<F>>, extra: &[Representation<F>]) -> Result<GendoTriple<F>> {
    let n = base.num_vertices();
    let mut summands: Vec<Representation<F>> = (0..n).map(|i| Representation::projective(base.clone(), i)).collect();
    summands.extend(extra.iter().cloned());
    let mut vertices = base.quiver().vertices().to_vec();
    let top = vertices.iter().copied().max().unwrap_or(0);
    vertices.extend((1..=extra.len() as i64).map(|k| top + k));
    let generator = Representation::direct_sum(&summands)?;
    if !is_generator(&generator)? {
        return Err(Error::InvalidModule("Λ ⊕ M is not a generator".into()));
    }
    let gendo = endomorphism_algebra(&summands, vertices)?;
    let gendo_symmetric = is_symmetric(base.table());
    Ok(GendoTriple { gendo, generator, base, gendo_symmetric })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fingerprint;
    use crate::constructions::families::{modified_brauer_star, path_algebra};
    use crate::field::{Q, F2};
    use crate::graphs::Quiver;

    #[test]
    fn end_of_regular_module_is_the_algebra() {
        let b = Arc::new(modified_brauer_star::<F2>(2, 1).unwrap());
        let ps: Vec<_> = (0..2).map(|i| Representation::projective(b.clone(), i)).collect();
        let e = endomorphism_algebra(&ps, vec![1, 2]).unwrap();
        e.table.check_associativity().unwrap();
        assert_eq!(fingerprint(&e.table).unwrap(), fingerprint(b.table()).unwrap());
    }

    #[test]
    fn hom_orthogonal_simples_give_a_product_of_fields() {
        let q = Quiver::from_triples(vec![1, 2, 3], &[("a", 1, 2), ("b", 2, 3)]).unwrap();
        let kq = Arc::new(path_algebra::<Q>(&q).unwrap());
        let simples: Vec<_> = (0..3).map(|i| Representation::simple(kq.clone(), i)).collect();
        let e = endomorphism_algebra(&simples, vec![1, 2, 3]).unwrap();
        assert_eq!(e.table.dim(), 3);
        assert_eq!(e.table.radical_layer_dims().unwrap(), vec![3]);
    }

    #[test]
    fn gendo_corner_recovers_base() {
        let b = Arc::new(modified_brauer_star::<Q>(2, 0).unwrap());
        let s1 = Representation::simple(b.clone(), 0);
        let g = gendo_algebra(b.clone(), &[s1]).unwrap();
        assert!(g.gendo_symmetric);
        assert_eq!(g.extra_vertex(0), 3);
        let corner = g.gendo.table.cut_at_vertices(&[1, 2]).unwrap();
        assert_eq!(fingerprint(&corner).unwrap(), fingerprint(b.table()).unwrap());
        assert!(gendo_algebra(b.clone(), &[Representation::projective(b.clone(), 0)]).is_err());
    }
}
