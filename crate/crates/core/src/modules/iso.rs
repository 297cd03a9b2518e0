//! Local endomorphism rings, indecomposability with Fitting certificates, and
//! module isomorphism tests.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{EchelonBasis, Matrix};
use crate::modules::{hom_space, ModuleMap, Representation};

const ENUMERATION_LIMIT: u64 = 1 << 20;
pub const DEFAULT_SEED: u64 = 0x6d6f_6475_6c65;

static SEED: AtomicU64 = AtomicU64::new(DEFAULT_SEED);

/// Seed used by the unseeded isomorphism and indecomposability tests.
pub fn set_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}

pub fn seed() -> u64 {
    SEED.load(Ordering::Relaxed)
}

fn unflatten<F: Field>(x: &[F], rows: &[usize], cols: &[usize]) -> ModuleMap<F> {
    let mut off = 0;
    let blocks = rows
        .iter()
        .zip(cols)
        .map(|(&r, &c)| {
            let b = Matrix::from_rows((0..r).map(|i| x[off + i * c..off + (i + 1) * c].to_vec()).collect(), c);
            off += r * c;
            b
        })
        .collect();
    ModuleMap { blocks }
}

fn combination<F: Field>(basis: &[ModuleMap<F>], coeffs: &[F]) -> ModuleMap<F> {
    let mut acc = basis[0].scale(&coeffs[0]);
    for (b, c) in basis.iter().zip(coeffs).skip(1) {
        acc = acc.add_scaled(b, c);
    }
    acc
}

/// Scalar `λ` with `h - λ` nilpotent, if there is one.
fn residue<F: Field>(h: &ModuleMap<F>, d: usize) -> Option<F> {
    let total = h.total_matrix();
    let nilpotent_after = |l: &F| total.sub(&Matrix::identity(d).scale(l)).is_nilpotent();
    let df = F::from_i64(d as i64);
    if !df.is_zero() {
        let l = total.trace().div(&df);
        return nilpotent_after(&l).then_some(l);
    }
    F::elements()?.into_iter().find(|l| nilpotent_after(l))
}

/// When `End(M)` is local, a basis of its radical.
pub fn end_is_local<F: Field>(m: &Representation<F>) -> Result<Option<Vec<ModuleMap<F>>>> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let end = hom_space(m, m)?;
    let d = m.dim();
    let id = m.identity_map();
    let mut shifted = Vec::new();
    for h in &end {
        let Some(l) = residue(h, d) else {
            return Ok(None);
        };
        shifted.push(h.add_scaled(&id, &(-l)));
    }
    let n = id.flatten().len();
    let mut rad = EchelonBasis::new(n);
    let mut gens = Vec::new();
    for r in shifted {
        if rad.insert(r.flatten()) {
            gens.push(r);
        }
    }
    if gens.len() + 1 != end.len() {
        return Ok(None);
    }
    // The span must be a nilpotent ideal: R·R ⊆ R and R^k = 0.
    let mut power = gens.clone();
    for _ in 0..=d {
        let mut next = EchelonBasis::new(n);
        let mut next_maps = Vec::new();
        for x in &power {
            for r in &gens {
                let p = x.compose(r);
                if !rad.contains(&p.flatten()) {
                    return Ok(None);
                }
                if next.insert(p.flatten()) {
                    next_maps.push(p);
                }
            }
        }
        if next_maps.is_empty() {
            return Ok(Some(gens));
        }
        power = next_maps;
    }
    Ok(None)
}

/// `M = ker f^N ⊕ im f^N`, per vertex.
#[derive(Clone, Debug)]
pub struct Splitting<F> {
    pub kernel: Vec<Vec<Vec<F>>>,
    pub image: Vec<Vec<Vec<F>>>,
}

impl<F: Field> Splitting<F> {
    pub fn kernel_dims(&self) -> Vec<usize> {
        self.kernel.iter().map(|v| v.len()).collect()
    }

    pub fn image_dims(&self) -> Vec<usize> {
        self.image.iter().map(|v| v.len()).collect()
    }
}

/// Fitting decomposition for an endomorphism that is neither nilpotent nor invertible.
pub fn fitting_splitting<F: Field>(m: &Representation<F>, f: &ModuleMap<F>) -> Option<Splitting<F>> {
    let d = m.dim().max(1);
    let powered: Vec<Matrix<F>> = f.blocks.iter().map(|b| b.pow(d)).collect();
    let nilpotent = powered.iter().all(|b| b.is_zero());
    let invertible = powered.iter().all(|b| b.is_invertible());
    if nilpotent || invertible {
        return None;
    }
    Some(Splitting {
        kernel: powered.iter().map(|b| b.nullspace()).collect(),
        image: powered.iter().map(|b| b.column_space()).collect(),
    })
}

#[derive(Clone, Debug)]
pub struct Indecomposability<F> {
    pub indecomposable: bool,
    /// False when the verdict rests on random sampling.
    pub exact: bool,
    pub end_dim: usize,
    /// `dim rad E / rad² E` when `E = End(M)` is local.
    pub radical_generators: Option<usize>,
    pub splitting: Option<Splitting<F>>,
}

fn radical_generator_count<F: Field>(rad: &[ModuleMap<F>]) -> usize {
    let Some(first) = rad.first() else {
        return 0;
    };
    let n = first.flatten().len();
    let mut sq = EchelonBasis::new(n);
    for a in rad {
        for b in rad {
            sq.insert(a.compose(b).flatten());
        }
    }
    rad.len() - sq.dim()
}

fn random_coeffs<F: Field>(rng: &mut ChaCha8Rng, k: usize) -> Vec<F> {
    match F::elements() {
        Some(e) => (0..k).map(|_| e[rng.gen_range(0..e.len())].clone()).collect(),
        None => (0..k).map(|_| F::from_i64(rng.gen_range(-4..=4))).collect(),
    }
}

/// Enumerates all nonzero combinations over a finite field, stopping when `visit` returns true.
fn enumerate_combinations<F: Field>(basis: &[ModuleMap<F>], mut visit: impl FnMut(&ModuleMap<F>) -> bool) -> Result<bool> {
    let elems = F::elements().ok_or(Error::EnumerateBound)?;
    let q = elems.len() as u64;
    let k = basis.len() as u32;
    let total = q.checked_pow(k).filter(|&t| t <= ENUMERATION_LIMIT).ok_or(Error::EnumerateBound)?;
    for mut code in 1..total {
        let coeffs: Vec<F> = (0..k)
            .map(|_| {
                let c = elems[(code % q) as usize].clone();
                code /= q;
                c
            })
            .collect();
        if visit(&combination(basis, &coeffs)) {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn is_indecomposable<F: Field>(m: &Representation<F>) -> Result<Indecomposability<F>> {
    is_indecomposable_seeded(m, seed())
}

pub fn is_indecomposable_seeded<F: Field>(m: &Representation<F>, seed: u64) -> Result<Indecomposability<F>> {
    if let Some(rad) = end_is_local(m)? {
        return Ok(Indecomposability {
            indecomposable: true,
            exact: true,
            end_dim: rad.len() + 1,
            radical_generators: Some(radical_generator_count(&rad)),
            splitting: None,
        });
    }
    let end = hom_space(m, m)?;
    let d = m.dim();
    let id = m.identity_map();
    let split = |s: Splitting<F>| Indecomposability {
        indecomposable: false,
        exact: true,
        end_dim: end.len(),
        radical_generators: None,
        splitting: Some(s),
    };
    let try_map = |f: &ModuleMap<F>| -> Option<Splitting<F>> {
        if let Some(s) = fitting_splitting(m, f) {
            return Some(s);
        }
        let df = F::from_i64(d as i64);
        if df.is_zero() {
            return None;
        }
        let l = f.total_matrix().trace().div(&df);
        fitting_splitting(m, &f.add_scaled(&id, &(-l)))
    };
    for h in &end {
        if let Some(s) = try_map(h) {
            return Ok(split(s));
        }
    }
    if F::elements().is_some() {
        let mut found = None;
        let searched = enumerate_combinations(&end, |f| {
            found = fitting_splitting(m, f);
            found.is_some()
        });
        match searched {
            Ok(true) => return Ok(split(found.expect("splitting recorded"))),
            Ok(false) => {
                return Ok(Indecomposability {
                    indecomposable: true,
                    exact: true,
                    end_dim: end.len(),
                    radical_generators: None,
                    splitting: None,
                })
            }
            Err(e) => return Err(e),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..128 {
        let f = combination(&end, &random_coeffs(&mut rng, end.len()));
        if let Some(s) = try_map(&f) {
            return Ok(split(s));
        }
    }
    Ok(Indecomposability {
        indecomposable: true,
        exact: end.len() == 1,
        end_dim: end.len(),
        radical_generators: None,
        splitting: None,
    })
}

pub fn is_isomorphic<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<bool> {
    is_isomorphic_seeded(m, n, seed())
}

pub fn is_isomorphic_seeded<F: Field>(m: &Representation<F>, n: &Representation<F>, seed: u64) -> Result<bool> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let hs = hom_space(m, n)?;
    if hs.is_empty() {
        return Ok(false);
    }
    if hs.iter().any(|h| h.is_invertible()) {
        return Ok(true);
    }
    let gs = hom_space(n, m)?;
    for h in &hs {
        for g in &gs {
            if g.compose(h).is_invertible() {
                return Ok(true);
            }
        }
    }
    if end_is_local(m)?.is_some() {
        return Ok(false);
    }
    if F::elements().is_some() {
        match enumerate_combinations(&hs, |f| f.is_invertible()) {
            Ok(found) => return Ok(found),
            Err(Error::EnumerateBound) => {}
            Err(e) => return Err(e),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        if combination(&hs, &random_coeffs(&mut rng, hs.len())).is_invertible() {
            return Ok(true);
        }
    }
    Err(Error::IsoInconclusive)
}

/// Rebuilds a map from its flattened entries.
pub fn map_from_flat<F: Field>(x: &[F], source: &Representation<F>, target: &Representation<F>) -> ModuleMap<F> {
    unflatten(x, target.dims(), source.dims())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::tests::cyclic2;

    #[test]
    fn simple_and_projective_are_indecomposable() {
        let alg = cyclic2();
        for m in [Representation::simple(alg.clone(), 0), Representation::projective(alg.clone(), 1)] {
            let r = is_indecomposable(&m).unwrap();
            assert!(r.indecomposable && r.exact);
        }
    }

    #[test]
    fn sum_splits_with_certificate() {
        let alg = cyclic2();
        let p1 = Representation::projective(alg.clone(), 0);
        let s1 = Representation::simple(alg.clone(), 0);
        let m = Representation::direct_sum(&[p1.clone(), s1.clone()]).unwrap();
        let r = is_indecomposable(&m).unwrap();
        assert!(!r.indecomposable);
        let s = r.splitting.unwrap();
        let dims: usize = s.kernel_dims().iter().chain(s.image_dims().iter()).sum();
        assert_eq!(dims, m.dim());
        assert!(m.submodule(&s.kernel).is_ok() && m.submodule(&s.image).is_ok());
    }

    #[test]
    fn isomorphism_checks() {
        let alg = cyclic2();
        let p1 = Representation::projective(alg.clone(), 0);
        let s1 = Representation::simple(alg.clone(), 0);
        let s2 = Representation::simple(alg.clone(), 1);
        assert!(is_isomorphic(&p1, &p1).unwrap());
        assert!(!is_isomorphic(&s1, &s2).unwrap());
        assert!(!is_isomorphic(&p1, &s1).unwrap());
        let a = Representation::direct_sum(&[s1.clone(), s2.clone()]).unwrap();
        let b = Representation::direct_sum(&[s2, s1]).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap());
    }
}
