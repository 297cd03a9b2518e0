//! Explicit indecomposable modules over the modified Brauer star algebra
//! `B_n^ε` (arrows `a`, `b1..bn`), one per `τ`-orbit.
//!
//! Row numbers refer to the labeling of `D_{3n}`: the path `1 - ⋯ - 3n-1`
//! with `3n` attached to `3n-2`.

use std::sync::Arc;

use crate::algebra::QuiverAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::modules::Representation;

/// A named module with the row of its `τ`-orbit.
#[derive(Clone, Debug)]
pub struct ZooModule<F: Field> {
    pub name: String,
    pub row: usize,
    pub module: Representation<F>,
}

/// Collects basis vectors per vertex and arrow actions between them.
struct Builder {
    dims: Vec<usize>,
    entries: Vec<(String, usize, usize)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { dims: vec![0; n], entries: Vec::new() }
    }

    /// New basis vector at vertex `v` (1-based).
    fn vector(&mut self, v: usize) -> (usize, usize) {
        let i = self.dims[v - 1];
        self.dims[v - 1] += 1;
        (v, i)
    }

    fn act(&mut self, arrow: String, from: (usize, usize), to: (usize, usize)) {
        self.entries.push((arrow, to.1, from.1));
    }

    /// `from · b_v · b_{v+1} ⋯` along fresh vectors at the next `len` vertices of the cycle.
    fn chain(&mut self, n: usize, mut from: (usize, usize), len: usize) -> (usize, usize) {
        for _ in 0..len {
            let v = from.0;
            let to = self.vector(v % n + 1);
            self.act(format!("b{v}"), from, to);
            from = to;
        }
        from
    }

    fn build<F: Field>(self, alg: Arc<QuiverAlgebra<F>>) -> Result<Representation<F>> {
        let entries: Vec<(&str, usize, usize, F)> =
            self.entries.iter().map(|(a, r, c)| (a.as_str(), *r, *c, F::one())).collect();
        Representation::from_entries(alg, self.dims, &entries)
    }
}

fn check(alg: &QuiverAlgebra<impl Field>) -> Result<usize> {
    let n = alg.num_vertices();
    let q = alg.quiver();
    if n < 2 || q.arrow_index("a").is_none() || (1..=n).any(|i| q.arrow_index(&format!("b{i}")).is_none()) {
        return Err(Error::InvalidModule("zoo modules need a modified Brauer star algebra with n ≥ 2".into()));
    }
    Ok(n)
}

/// `rad P_i` for the vertex label `i`.
pub fn radical_of_projective<F: Field>(alg: Arc<QuiverAlgebra<F>>, i: i64) -> Result<Representation<F>> {
    let pos = alg.vertex_position(i).ok_or(Error::UnknownVertex(i))?;
    let p = Representation::projective(alg, pos);
    let rad: Vec<Vec<Vec<F>>> = p.radical_spaces().iter().map(|s| s.rows().to_vec()).collect();
    p.submodule(&rad)
}

/// `H_{r,1}` for `1 ≤ r ≤ n-1`: top `1` with `α` and `β` out, then a `β`-chain from `α`'s image to vertex `r+1`.
pub fn h_module<F: Field>(alg: Arc<QuiverAlgebra<F>>, r: usize) -> Result<Representation<F>> {
    let n = check(&alg)?;
    if !(1..n).contains(&r) {
        return Err(Error::InvalidModule(format!("H_{{{r},1}} needs 1 ≤ r ≤ {}", n - 1)));
    }
    let mut b = Builder::new(n);
    let top = b.vector(1);
    b.chain(n, top, 1);
    let low = b.vector(1);
    b.act("a".into(), top, low);
    b.chain(n, low, r);
    b.build(alg)
}

/// `L_{r,s}` for `0 ≤ r, s ≤ n-1`: `α: 1 → 1` with a `β`-chain of length `r`
/// from vertex `n-r+1` into the socle and one of length `s` out of the top.
pub fn l_module<F: Field>(alg: Arc<QuiverAlgebra<F>>, r: usize, s: usize) -> Result<Representation<F>> {
    let n = check(&alg)?;
    if r >= n || s >= n {
        return Err(Error::InvalidModule(format!("L_{{{r},{s}}} needs r, s < {n}")));
    }
    let mut b = Builder::new(n);
    let top = b.vector(1);
    let low = b.vector(1);
    b.act("a".into(), top, low);
    b.chain(n, top, s);
    if r > 0 {
        let start = b.vector(n - r + 1);
        let last = if r > 1 { b.chain(n, start, r - 1) } else { start };
        b.act(format!("b{n}"), last, low);
    }
    b.build(alg)
}

/// `D = P_1 / αβ_1 P_1`.
pub fn d_module<F: Field>(alg: Arc<QuiverAlgebra<F>>) -> Result<Representation<F>> {
    let n = check(&alg)?;
    let mut b = Builder::new(n);
    let top = b.vector(1);
    let mid = b.vector(1);
    let bottom = b.vector(1);
    b.act("a".into(), top, mid);
    b.act("a".into(), mid, bottom);
    let last = b.chain(n, top, n - 1);
    b.act(format!("b{n}"), last, bottom);
    b.build(alg)
}

/// One module per `τ`-orbit: `rad P_2`, `H_{r,1}` (`1 ≤ r < n`),
/// `L_{0,s}` and `L_{r,n-1}` (`1 ≤ r, s < n`), `S_1` and `D`.
pub fn zoo<F: Field>(alg: Arc<QuiverAlgebra<F>>) -> Result<Vec<ZooModule<F>>> {
    let n = check(&alg)?;
    let mut out = vec![ZooModule { name: "rad P_2".into(), row: 1, module: radical_of_projective(alg.clone(), 2)? }];
    for r in (1..n).rev() {
        out.push(ZooModule { name: format!("H_{{{r},1}}"), row: n - r + 1, module: h_module(alg.clone(), r)? });
    }
    for s in 1..n {
        out.push(ZooModule { name: format!("L_{{0,{s}}}"), row: n + s, module: l_module(alg.clone(), 0, s)? });
    }
    for r in 1..n {
        out.push(ZooModule {
            name: format!("L_{{{r},{}}}", n - 1),
            row: 2 * n - 1 + r,
            module: l_module(alg.clone(), r, n - 1)?,
        });
    }
    out.push(ZooModule { name: "S_1".into(), row: 3 * n - 1, module: Representation::simple(alg.clone(), 0) });
    out.push(ZooModule { name: "D".into(), row: 3 * n, module: d_module(alg)? });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families::modified_brauer_star;
    use crate::field::F2;
    use crate::modules::{end_is_local, hom_dim, is_indecomposable};

    #[test]
    fn b2_zoo_dimensions() {
        let alg = Arc::new(modified_brauer_star::<F2>(2, 0).unwrap());
        assert_eq!(l_module(alg.clone(), 0, 0).unwrap().dims(), &[2, 0]);
        assert_eq!(l_module(alg.clone(), 1, 1).unwrap().dims(), &[2, 2]);
        assert_eq!(l_module(alg.clone(), 1, 0).unwrap().loewy_layers(), vec![2, 1]);
        assert_eq!(d_module(alg.clone()).unwrap().dim(), 4);
        assert_eq!(radical_of_projective(alg.clone(), 2).unwrap().loewy_layers(), vec![1, 1, 1]);
        let rows: Vec<usize> = zoo(alg).unwrap().iter().map(|z| z.row).collect();
        assert_eq!(rows, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn l11_has_local_end_with_two_generators() {
        let alg = Arc::new(modified_brauer_star::<F2>(2, 1).unwrap());
        let m = l_module(alg, 1, 1).unwrap();
        let r = is_indecomposable(&m).unwrap();
        assert!(r.indecomposable && r.exact);
        assert_eq!(r.radical_generators, Some(2));
        assert!(end_is_local(&m).unwrap().is_some());
    }

    #[test]
    fn zoo_modules_are_indecomposable_and_hom_into_projectives_matches() {
        for n in 2..=3 {
            let alg = Arc::new(modified_brauer_star::<F2>(n, 0).unwrap());
            for z in zoo(alg.clone()).unwrap() {
                assert!(is_indecomposable(&z.module).unwrap().indecomposable, "{}", z.name);
                for i in 0..n {
                    let p = Representation::projective(alg.clone(), i);
                    assert_eq!(hom_dim(&p, &z.module).unwrap(), z.module.dims()[i]);
                }
            }
        }
    }

    #[test]
    fn out_of_range_parameters_are_rejected() {
        let alg = Arc::new(modified_brauer_star::<F2>(2, 0).unwrap());
        assert!(h_module(alg.clone(), 2).is_err());
        assert!(l_module(alg, 2, 0).is_err());
    }
}
