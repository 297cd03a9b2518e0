//! `τ`-orbits of non-projective indecomposables and their row labels.

use std::sync::Arc;

use crate::algebra::QuiverAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{canonical_automorphism, Family, Quiver};
use crate::modules::zoo::zoo;
use crate::modules::{is_isomorphic, tau, Representation};
use crate::constructions::triv::{inflate, injective_kq};

/// `[M, τM, …, τ^{p-1}M]`, after checking `τ^p M ≅ M`.
pub fn tau_orbit<F: Field>(m: &Representation<F>, period: usize) -> Result<Vec<Representation<F>>> {
    let mut orbit = vec![m.clone()];
    let mut cur = m.clone();
    for k in 1..=period {
        cur = tau(&cur)?;
        if k < period {
            orbit.push(cur.clone());
        }
    }
    if !is_isomorphic(&cur, m)? {
        return Err(Error::OrbitMismatch(format!("τ^{period} does not return to the starting module")));
    }
    Ok(orbit)
}

#[derive(Clone, Debug)]
pub struct OrbitLabel<F: Field> {
    pub row: usize,
    /// `row` together with its image under the graph automorphism, sorted.
    pub rows: Vec<usize>,
    pub orbit: Vec<Representation<F>>,
}

/// Anchored `τ`-orbits of an algebra with known stable AR-quiver.
#[derive(Clone, Debug)]
pub struct OrbitAtlas<F: Field> {
    pub period: usize,
    pub orbits: Vec<(usize, Vec<Representation<F>>)>,
    automorphism: Option<Vec<(usize, usize)>>,
}

impl<F: Field> OrbitAtlas<F> {
    pub fn new(anchors: Vec<(usize, Representation<F>)>, period: usize, automorphism: Option<Vec<(usize, usize)>>) -> Result<Self> {
        let orbits = anchors
            .into_iter()
            .map(|(row, m)| Ok((row, tau_orbit(&m, period)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(OrbitAtlas { period, orbits, automorphism })
    }

    pub fn rows_up_to_automorphism(&self, row: usize) -> Vec<usize> {
        let mut rows = vec![row];
        if let Some(img) = self.automorphism.as_ref().and_then(|a| a.iter().find(|(r, _)| *r == row)) {
            if img.1 != row {
                rows.push(img.1);
            }
        }
        rows.sort_unstable();
        rows
    }

    /// Locates the orbit of `m` among the anchored ones.
    pub fn row_label(&self, m: &Representation<F>) -> Result<OrbitLabel<F>> {
        for (row, orbit) in &self.orbits {
            for x in orbit {
                if x.dims() == m.dims() && is_isomorphic(x, m)? {
                    return Ok(OrbitLabel { row: *row, rows: self.rows_up_to_automorphism(*row), orbit: orbit.clone() });
                }
            }
        }
        Err(Error::OrbitMismatch("module lies in none of the anchored orbits".into()))
    }

    /// Pairs of anchor rows whose orbits meet.
    pub fn overlapping_rows(&self) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for (i, (ri, oi)) in self.orbits.iter().enumerate() {
            for (rj, oj) in &self.orbits[i + 1..] {
                let head = &oj[0];
                let mut hit = false;
                for x in oi {
                    if x.dims() == head.dims() && is_isomorphic(x, head)? {
                        hit = true;
                        break;
                    }
                }
                if hit {
                    out.push((*ri, *rj));
                }
            }
        }
        Ok(out)
    }
}

fn swaps(family: Family, rank: usize) -> Option<Vec<(usize, usize)>> {
    canonical_automorphism(family, rank).map(|m| m.into_iter().map(|(a, b)| (a as usize, b as usize)).collect())
}

/// Orbits of `B_n^ε` anchored at the zoo, in `ℤD_{3n}/⟨τ^{2n-1}⟩`.
pub fn mbs_atlas<F: Field>(alg: Arc<QuiverAlgebra<F>>) -> Result<OrbitAtlas<F>> {
    let n = alg.num_vertices();
    let anchors = zoo(alg)?.into_iter().map(|z| (z.row, z.module)).collect();
    OrbitAtlas::new(anchors, 2 * n - 1, swaps(Family::D, 3 * n))
}

/// Uniserial module of length `len` with top at vertex position `start` over a cyclic Nakayama algebra.
pub fn uniserial<F: Field>(alg: Arc<QuiverAlgebra<F>>, start: usize, len: usize) -> Result<Representation<F>> {
    let n = alg.num_vertices();
    let mut dims = vec![0; n];
    let mut at = Vec::with_capacity(len);
    for k in 0..len {
        let v = (start + k) % n;
        at.push((v, dims[v]));
        dims[v] += 1;
    }
    let ids: Vec<String> = (0..len.saturating_sub(1)).map(|k| format!("b{}", at[k].0 + 1)).collect();
    let entries: Vec<(&str, usize, usize, F)> =
        (0..len.saturating_sub(1)).map(|k| (ids[k].as_str(), at[k + 1].1, at[k].1, F::one())).collect();
    Representation::from_entries(alg, dims, &entries)
}

/// Orbits of `N_{n,m}` in `ℤA_{mn}/⟨τ^n⟩`, anchored at the uniserial quotients
/// of `P_1`; the one of length `ℓ` lies in row `ℓ`.
pub fn nakayama_atlas<F: Field>(alg: Arc<QuiverAlgebra<F>>, m: usize) -> Result<OrbitAtlas<F>> {
    let n = alg.num_vertices();
    let top = m * n;
    let anchors = (1..=top).map(|l| Ok((l, uniserial(alg.clone(), 0, l)?))).collect::<Result<Vec<_>>>()?;
    OrbitAtlas::new(anchors, n, swaps(Family::A, top))
}

/// Orbits of `Triv(KQ)` anchored at the inflated injectives `D(KQe_v)` in
/// row `v`, where the vertices of `Q` carry the standard labels of `Δ`.
pub fn triv_atlas<F: Field>(
    q: &Quiver,
    kq: Arc<QuiverAlgebra<F>>,
    triv: Arc<QuiverAlgebra<F>>,
    family: Family,
    rank: usize,
) -> Result<OrbitAtlas<F>> {
    if q.vertices().len() != rank {
        return Err(Error::InvalidType(format!("quiver has {} vertices, Δ has {rank}", q.vertices().len())));
    }
    let anchors = q
        .vertices()
        .iter()
        .map(|&v| Ok((v as usize, inflate(&injective_kq(kq.clone(), v)?, triv.clone())?)))
        .collect::<Result<Vec<_>>>()?;
    let h = crate::graphs::coxeter_number(family, rank);
    OrbitAtlas::new(anchors, h - 1, swaps(family, rank))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families::{modified_brauer_star, nakayama, path_algebra, triv_kq};
    use crate::field::{Q, F2};
    use crate::modules::zoo::{l_module, radical_of_projective};

    #[test]
    fn b2_orbits_close_and_label_rows() {
        let alg = Arc::new(modified_brauer_star::<F2>(2, 0).unwrap());
        let atlas = mbs_atlas(alg.clone()).unwrap();
        assert_eq!(atlas.period, 3);
        assert!(atlas.overlapping_rows().unwrap().is_empty());
        let rad = radical_of_projective(alg.clone(), 2).unwrap();
        assert_eq!(atlas.row_label(&rad).unwrap().row, 1);
        let l00 = l_module(alg.clone(), 0, 0).unwrap();
        assert_eq!(atlas.row_label(&l00).unwrap().row, 2);
        let s1 = Representation::simple(alg, 0);
        assert_eq!(atlas.row_label(&s1).unwrap().rows, vec![5, 6]);
    }

    #[test]
    fn nakayama_simples_and_radicals_sit_at_the_ends() {
        let alg = Arc::new(nakayama::<Q>(2, 2).unwrap());
        let atlas = nakayama_atlas(alg.clone(), 2).unwrap();
        for i in 0..2 {
            let s = Representation::simple(alg.clone(), i);
            assert_eq!(atlas.row_label(&s).unwrap().rows, vec![1, 4]);
            let r = radical_of_projective(alg.clone(), i as i64 + 1).unwrap();
            assert_eq!(atlas.row_label(&r).unwrap().rows, vec![1, 4]);
        }
    }

    #[test]
    fn triv_a2_injectives_are_periodic() {
        let q = Quiver::from_triples(vec![1, 2], &[("a", 1, 2)]).unwrap();
        let kq = Arc::new(path_algebra::<Q>(&q).unwrap());
        let tr = Arc::new(triv_kq::<Q>(&q).unwrap());
        let atlas = triv_atlas(&q, kq, tr, Family::A, 2).unwrap();
        assert_eq!(atlas.period, 2);
        assert!(atlas.overlapping_rows().unwrap().is_empty());
    }
}
