//! Projective covers, syzygies and the AR translate `τ = Ω²` over symmetric algebras.

use crate::algebra::is_symmetric;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::modules::{ModuleMap, Representation};

#[derive(Clone, Debug)]
pub struct Cover<F: Field> {
    pub projective: Representation<F>,
    pub map: ModuleMap<F>,
    /// Vertex position of each indecomposable summand of the cover, in order.
    pub summands: Vec<usize>,
}

/// Minimal projective cover, built from a basis of the top.
pub fn projective_cover<F: Field>(m: &Representation<F>) -> Result<Cover<F>> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let alg = m.algebra().clone();
    let table = alg.table();
    let rad = m.radical_spaces();
    let mut generators: Vec<(usize, Vec<F>)> = Vec::new();
    for (i, r) in rad.iter().enumerate() {
        for k in (0..m.dims()[i]).filter(|k| !r.pivots().contains(k)) {
            let mut g = vec![F::zero(); m.dims()[i]];
            g[k] = F::one();
            generators.push((i, g));
        }
    }
    let summands: Vec<usize> = generators.iter().map(|(i, _)| *i).collect();
    let parts: Vec<Representation<F>> =
        summands.iter().map(|&i| Representation::projective(alg.clone(), i)).collect();
    let projective = Representation::direct_sum(&parts)?;
    let blocks = (0..m.dims().len())
        .map(|v| {
            let mut cols = Vec::new();
            for (i, g) in &generators {
                for k in (0..table.dim()).filter(|&k| table.block(k) == (*i, v)) {
                    cols.push(m.word_matrix(*i, &alg.words()[k]).mul_vec(g));
                }
            }
            Matrix::from_columns(&cols, m.dims()[v])
        })
        .collect();
    Ok(Cover { projective, map: ModuleMap { blocks }, summands })
}

/// `Ω(M)`, the kernel of the projective cover.
pub fn syzygy<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    if m.is_zero() {
        return Ok(m.clone());
    }
    let cover = projective_cover(m)?;
    let kernel: Vec<Vec<Vec<F>>> = cover.map.blocks.iter().map(|b| b.nullspace()).collect();
    cover.projective.submodule(&kernel)
}

/// `τ(M) = Ω²(M)`; only meaningful over symmetric algebras.
pub fn tau<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    if !is_symmetric(m.algebra().table()) {
        return Err(Error::NotSymmetric);
    }
    syzygy(&syzygy(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{algebra_from_presentation, Presentation};
    use crate::field::Q;
    use crate::graphs::Quiver;
    use crate::modules::tests::cyclic2;
    use std::sync::Arc;

    #[test]
    fn syzygy_of_simple_is_radical() {
        let alg = cyclic2();
        let s1 = Representation::simple(alg.clone(), 0);
        let cover = projective_cover(&s1).unwrap();
        assert_eq!(cover.summands, vec![0]);
        let om = syzygy(&s1).unwrap();
        assert_eq!(om.dims(), &[1, 1]);
        assert_eq!(om.top_dims(), vec![0, 1]);
        let p1 = Representation::projective(alg.clone(), 0);
        assert!(syzygy(&p1).unwrap().is_zero());
        assert_eq!(projective_cover(&p1).unwrap().summands, vec![0]);
    }

    #[test]
    fn tau_needs_symmetry() {
        let q = Quiver::from_triples(vec![1, 2], &[("a", 1, 2)]).unwrap();
        let alg = Arc::new(algebra_from_presentation(&Presentation::<Q>::new(q, vec![], 2).unwrap()).unwrap());
        let s = Representation::simple(alg, 0);
        assert_eq!(tau(&s).unwrap_err(), Error::NotSymmetric);
        assert!(tau(&Representation::simple(cyclic2(), 0)).is_ok());
    }
}
