//! Symmetric algebras: search for a nondegenerate symmetric associative form
//! `B(x, y) = t(xy)` given by a linear functional `t` vanishing on commutators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgebraTable;
use crate::field::Field;
use crate::linalg::{EchelonBasis, Matrix};

/// Gram matrix `G[i][j] = t(b_i b_j)`.
pub fn gram_matrix<F: Field>(a: &AlgebraTable<F>, t: &[F]) -> Matrix<F> {
    let d = a.dim();
    let mut g = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let mut s = F::zero();
            for (k, c) in a.mul_basis(i, j) {
                s.add_mul_assign(c, &t[*k]);
            }
            g[(i, j)] = s;
        }
    }
    g
}

/// Whether `t` defines a nondegenerate symmetric associative form.
pub fn is_symmetrizing_form<F: Field>(a: &AlgebraTable<F>, t: &[F]) -> bool {
    let g = gram_matrix(a, t);
    g == g.transpose() && g.is_invertible()
}

fn eval<F: Field>(t: &[F], x: &[F]) -> F {
    let mut s = F::zero();
    for (a, b) in t.iter().zip(x) {
        s.add_mul_assign(a, b);
    }
    s
}

fn combine<F: Field>(basis: &[Vec<F>], coeffs: &[F]) -> Vec<F> {
    let mut t = vec![F::zero(); basis[0].len()];
    for (c, v) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (x, y) in t.iter_mut().zip(v) {
            x.add_mul_assign(c, y);
        }
    }
    t
}

fn search<F: Field>(a: &AlgebraTable<F>) -> Option<Vec<F>> {
    let d = a.dim();
    let mut commutators = EchelonBasis::new(d);
    for i in 0..d {
        for j in i + 1..d {
            let mut c = vec![F::zero(); d];
            for (k, v) in a.mul_basis(i, j) {
                c[*k] = c[*k].clone() + v.clone();
            }
            for (k, v) in a.mul_basis(j, i) {
                c[*k] = c[*k].clone() - v.clone();
            }
            if c.iter().any(|x| !x.is_zero()) {
                commutators.insert(c);
            }
        }
    }
    let candidates = if commutators.dim() == 0 {
        (0..d).map(|k| a.basis_vec(k)).collect()
    } else {
        Matrix::from_rows(commutators.rows().to_vec(), d).nullspace()
    };
    if candidates.is_empty() {
        return None;
    }
    let socles: Vec<Vec<F>> =
        (0..a.num_vertices()).flat_map(|i| a.socle_of_projective(i).unwrap_or_default()).collect();
    let accept = |t: &Vec<F>| socles.iter().all(|s| !eval(t, s).is_zero()) && is_symmetrizing_form(a, t);
    let k = candidates.len();
    match F::elements() {
        None => {
            // det G(x) for t = Σ x^j T_j is a polynomial of degree ≤ d(k-1),
            // so some x in 0..=d(k-1) works whenever any t does.
            for x in 0..=(d * k.saturating_sub(1)) as i64 {
                let mut pow = F::one();
                let coeffs: Vec<F> = (0..k)
                    .map(|_| {
                        let c = pow.clone();
                        pow = pow.clone() * F::from_i64(x);
                        c
                    })
                    .collect();
                let t = combine(&candidates, &coeffs);
                if accept(&t) {
                    return Some(t);
                }
            }
            None
        }
        Some(elems) => {
            let q = elems.len() as u64;
            let exhaustive = (k as u32) < 64 && q.checked_pow(k as u32).is_some_and(|n| n <= 1 << 12);
            if exhaustive {
                let total = q.pow(k as u32);
                for mut code in 1..total {
                    let coeffs: Vec<F> = (0..k)
                        .map(|_| {
                            let c = elems[(code % q) as usize].clone();
                            code /= q;
                            c
                        })
                        .collect();
                    let t = combine(&candidates, &coeffs);
                    if accept(&t) {
                        return Some(t);
                    }
                }
                None
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
                for _ in 0..64 {
                    let coeffs: Vec<F> = (0..k).map(|_| elems[rng.gen_range(0..elems.len())].clone()).collect();
                    let t = combine(&candidates, &coeffs);
                    if accept(&t) {
                        return Some(t);
                    }
                }
                None
            }
        }
    }
}

/// A symmetrizing functional, if the algebra is symmetric.
pub fn symmetric_form<F: Field>(a: &AlgebraTable<F>) -> Option<Vec<F>> {
    a.symmetric_cache().get_or_init(|| search(a)).clone()
}

pub fn is_symmetric<F: Field>(a: &AlgebraTable<F>) -> bool {
    symmetric_form(a).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{truncated_poly, two_points};
    use crate::algebra::presentation::{algebra_from_presentation, Presentation};
    use crate::field::{Q, F2};
    use crate::graphs::Quiver;

    #[test]
    fn dual_numbers_are_symmetric() {
        let a: AlgebraTable<Q> = truncated_poly(2);
        let t = symmetric_form(&a).unwrap();
        assert!(is_symmetrizing_form(&a, &t));
        assert!(is_symmetric(&truncated_poly::<F2>(3)));
        assert!(is_symmetric(&two_points::<Q>()));
    }

    #[test]
    fn hereditary_a2_is_not_symmetric() {
        let q = Quiver::from_triples(vec![1, 2], &[("a", 1, 2)]).unwrap();
        let a = algebra_from_presentation(&Presentation::<Q>::new(q, vec![], 2).unwrap()).unwrap();
        assert!(!is_symmetric(a.table()));
    }
}
