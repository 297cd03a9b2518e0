//! Scripted verification pipelines over the three families of base algebras.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{fingerprint, AlgebraTable, Fingerprint, QuiverAlgebra};
use crate::classifier::certificate::{certify_infinite, search_certificate, InfinitenessCertificate};
use crate::constructions::endo::gendo_algebra;
use crate::constructions::families::{modified_brauer_star, nakayama, path_algebra, triv_kq};
use crate::error::Result;
use crate::field::Field;
use crate::graphs::{coxeter_number, Family, Quiver};
use crate::modules::orbit::{mbs_atlas, tau_orbit, uniserial};
use crate::modules::zoo::{d_module, h_module, l_module, radical_of_projective, zoo};
use crate::modules::{is_isomorphic, tau, Representation};
use crate::constructions::triv::{inflate, injective_kq};

fn gendo_table<F: Field>(base: &Arc<QuiverAlgebra<F>>, m: &Representation<F>) -> Result<AlgebraTable<F>> {
    Ok(gendo_algebra(base.clone(), std::slice::from_ref(m))?.gendo.table)
}

#[derive(Clone, Debug, Serialize)]
pub struct FingerprintCase {
    pub name: String,
    pub left: Fingerprint,
    pub right: Fingerprint,
    pub pass: bool,
}

impl FingerprintCase {
    fn new(name: String, left: Fingerprint, right: Fingerprint) -> Self {
        let pass = left == right;
        FingerprintCase { name, left, right, pass }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EndMbtaReport {
    pub n: usize,
    pub eps: u8,
    pub field: String,
    pub cases: Vec<FingerprintCase>,
    pub pass: bool,
}

/// `End_{B_n}(B_n ⊕ rad P_i)` against `B_{n+1}/soc P_{i+1}` for `2 ≤ i ≤ n`.
pub fn verify_lemma_endmbta<F: Field>(n: usize, eps: u8) -> Result<EndMbtaReport> {
    let base = Arc::new(modified_brauer_star::<F>(n, eps)?);
    let bigger = modified_brauer_star::<F>(n + 1, eps)?;
    let mut cases = Vec::new();
    for i in 2..=n as i64 {
        let end = gendo_table(&base, &radical_of_projective(base.clone(), i)?)?;
        let quotient = bigger.table().quotient_by_socle(i + 1)?;
        cases.push(FingerprintCase::new(format!("rad P_{i}"), fingerprint(&end)?, fingerprint(&quotient)?));
    }
    let pass = cases.iter().all(|c| c.pass);
    Ok(EndMbtaReport { n, eps, field: F::NAME.into(), cases, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct SixCase {
    pub module: String,
    pub cut: Vec<i64>,
    /// `dim e_i (J/J²) e_j` of the corner, in the order of `cut`.
    pub corner_ext1: Vec<Vec<usize>>,
    pub expected_ext1: Option<Vec<Vec<usize>>>,
    pub certificate: Option<InfinitenessCertificate>,
    pub expected_class: Option<String>,
    /// For `rad P_2`: agreement with `B_3/soc P_3`.
    pub finite_fingerprint_match: Option<bool>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SixCaseReport {
    pub eps: u8,
    pub field: String,
    pub cases: Vec<SixCase>,
    pub pass: bool,
}

/// The six gendo algebras `End_{B_2}(B_2 ⊕ M)`: `x` is the vertex of `M` (label 3).
pub fn six_case_b2<F: Field>(eps: u8) -> Result<SixCaseReport> {
    let b = Arc::new(modified_brauer_star::<F>(2, eps)?);
    let x = 3;
    let mut cases = Vec::new();

    let rad = gendo_table(&b, &radical_of_projective(b.clone(), 2)?)?;
    let b3 = modified_brauer_star::<F>(3, eps)?.table().quotient_by_socle(3)?;
    let matches = fingerprint(&rad)? == fingerprint(&b3)?;
    cases.push(SixCase {
        module: "rad P_2".into(),
        cut: vec![1, 2, x],
        corner_ext1: rad.ext1_matrix()?,
        expected_ext1: None,
        certificate: None,
        expected_class: None,
        finite_fingerprint_match: Some(matches),
        pass: matches,
    });

    let loops_both_ways = vec![vec![1, 1], vec![1, 1]];
    let specs: Vec<(&str, Representation<F>, Vec<i64>, Option<Vec<Vec<usize>>>, &str)> = vec![
        ("L_{0,0}", l_module(b.clone(), 0, 0)?, vec![1, x], Some(loops_both_ways.clone()), "~A3"),
        ("L_{1,0}", l_module(b.clone(), 1, 0)?, vec![1, x], Some(loops_both_ways), "~A3"),
        ("L_{1,1}", l_module(b.clone(), 1, 1)?, vec![x], Some(vec![vec![2]]), "~A1"),
        (
            "S_1",
            Representation::simple(b.clone(), 0),
            vec![1, 2, x],
            Some(vec![vec![1, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]),
            "~D5",
        ),
        ("D", d_module(b.clone())?, vec![1, 2, x], None, ""),
    ];
    for (name, m, cut, expected, class) in specs {
        let g = gendo_table(&b, &m)?;
        let corner = g.cut_at_vertices(&cut)?;
        let corner_ext1 = corner.ext1_matrix()?;
        let certificate = if class.is_empty() { search_certificate(&g, x)? } else { certify_infinite(&g, &cut)? };
        let quiver_ok = expected.as_ref().is_none_or(|e| *e == corner_ext1);
        let class_ok = match &certificate {
            Some(c) => class.is_empty() || c.class == class,
            None => false,
        };
        cases.push(SixCase {
            module: name.into(),
            cut,
            corner_ext1,
            expected_ext1: expected,
            pass: quiver_ok && class_ok && certificate.as_ref().is_some_and(|c| c.revalidate().unwrap_or(false)),
            certificate,
            expected_class: (!class.is_empty()).then(|| class.to_string()),
            finite_fingerprint_match: None,
        });
    }
    let pass = cases.iter().all(|c| c.pass);
    Ok(SixCaseReport { eps, field: F::NAME.into(), cases, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionRow {
    pub module: String,
    /// Vertices of `e`; the corner also contains `e_M`.
    pub e: Vec<i64>,
    pub tabulated: String,
    pub corner: Fingerprint,
    pub tabulated_gendo: Fingerprint,
    pub fingerprint_match: bool,
    /// When the fingerprint differs: the smallest `k` with the corner equal to
    /// `End_{B_2}(B_2 ⊕ τ^k Me)`.
    pub tau_shift: Option<usize>,
    /// Direct certificate on `End(B_n ⊕ M)`, independent of the reduction.
    pub certificate: Option<InfinitenessCertificate>,
    /// The corner matches `Me` or a module in its `τ`-orbit.
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub n: usize,
    pub eps: u8,
    pub field: String,
    pub rows: Vec<ReductionRow>,
    pub pass: bool,
}

/// Rows of the reduction table for `B_n`: the module, the vertices of `e`, and
/// the tabulated `Me` over `B_2` as `(r, s)` of `L_{r,s}`, or a name.
fn reduction_rows<F: Field>(b: &Arc<QuiverAlgebra<F>>) -> Result<Vec<(String, Representation<F>, Vec<i64>, &'static str)>> {
    let n = b.num_vertices();
    let mut rows = Vec::new();
    for r in 1..n {
        rows.push((format!("H_{{{r},1}}"), h_module(b.clone(), r)?, vec![1, 2], "L_{0,0}"));
    }
    rows.push(("L_{0,0}".into(), l_module(b.clone(), 0, 0)?, vec![1, 2], "L_{0,0}"));
    for t in 1..n {
        rows.push((format!("L_{{{t},0}}"), l_module(b.clone(), t, 0)?, vec![1, (n - t + 1) as i64], "L_{1,0}"));
    }
    for s in 1..n {
        rows.push((format!("L_{{{},{s}}}", n - 1), l_module(b.clone(), n - 1, s)?, vec![1, 2], "L_{1,1}"));
    }
    rows.push(("S_1".into(), Representation::simple(b.clone(), 0), vec![1, 2], "S_1"));
    rows.push(("D".into(), d_module(b.clone())?, vec![1, 2], "D"));
    Ok(rows)
}

fn b2_module<F: Field>(b2: &Arc<QuiverAlgebra<F>>, name: &str) -> Result<Representation<F>> {
    Ok(match name {
        "L_{0,0}" => l_module(b2.clone(), 0, 0)?,
        "L_{1,0}" => l_module(b2.clone(), 1, 0)?,
        "L_{1,1}" => l_module(b2.clone(), 1, 1)?,
        "S_1" => Representation::simple(b2.clone(), 0),
        _ => d_module(b2.clone())?,
    })
}

/// Cuts `End(B_n ⊕ M)` at `e + e_M` and compares with `End_{B_2}(B_2 ⊕ Me)`.
pub fn verify_reduction_table<F: Field>(n: usize, eps: u8) -> Result<ReductionReport> {
    let b = Arc::new(modified_brauer_star::<F>(n, eps)?);
    let b2 = Arc::new(modified_brauer_star::<F>(2, eps)?);
    let x = n as i64 + 1;
    let mut rows = Vec::new();
    for (name, m, e, tabulated) in reduction_rows(&b)? {
        let g = gendo_table(&b, &m)?;
        let mut cut = e.clone();
        cut.push(x);
        let corner = fingerprint(&g.cut_at_vertices(&cut)?)?;
        let me = b2_module(&b2, tabulated)?;
        let tabulated_gendo = fingerprint(&gendo_table(&b2, &me)?)?;
        let fingerprint_match = corner == tabulated_gendo;
        let mut tau_shift = None;
        if !fingerprint_match {
            let mut cur = me.clone();
            for k in 1..3 {
                cur = tau(&cur)?;
                if fingerprint(&gendo_table(&b2, &cur)?)? == corner {
                    tau_shift = Some(k);
                    break;
                }
            }
        }
        let certificate = search_certificate(&g, x)?;
        let pass = fingerprint_match || tau_shift.is_some();
        rows.push(ReductionRow {
            module: name,
            e,
            tabulated: tabulated.into(),
            corner,
            tabulated_gendo,
            fingerprint_match,
            tau_shift,
            certificate,
            pass,
        });
    }
    let pass = rows.iter().all(|r| r.pass);
    Ok(ReductionReport { n, eps, field: F::NAME.into(), rows, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct NakayamaReport {
    pub n: usize,
    pub m: usize,
    pub radical: FingerprintCase,
    pub simple: FingerprintCase,
    pub pass: bool,
}

/// `End_{N_{n,m}}(N ⊕ rad Q_1)` and `End(N ⊕ S_1)` against `N_{n+1,m}/soc P_1`.
/// Only the radical is required to match; the simple gives a derived
/// equivalent algebra and is reported for comparison.
pub fn verify_nakayama<F: Field>(n: usize, m: usize) -> Result<NakayamaReport> {
    let base = Arc::new(nakayama::<F>(n, m)?);
    let target = fingerprint(&nakayama::<F>(n + 1, m)?.table().quotient_by_socle(1)?)?;
    let rad = fingerprint(&gendo_table(&base, &radical_of_projective(base.clone(), 1)?)?)?;
    let simple = fingerprint(&gendo_table(&base, &Representation::simple(base.clone(), 0))?)?;
    let radical = FingerprintCase::new("rad Q_1".into(), rad, target.clone());
    let simple = FingerprintCase::new("S_1".into(), simple, target);
    let pass = radical.pass;
    Ok(NakayamaReport { n, m, radical, simple, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct PeriodCase {
    pub algebra: String,
    pub module: String,
    pub period: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TauReport {
    pub cases: Vec<PeriodCase>,
    pub pass: bool,
}

fn closes<F: Field>(m: &Representation<F>, period: usize) -> Result<bool> {
    match tau_orbit(m, period) {
        Ok(_) => Ok(true),
        Err(crate::error::Error::OrbitMismatch(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

fn report(cases: Vec<PeriodCase>) -> TauReport {
    let pass = cases.iter().all(|c| c.pass);
    TauReport { cases, pass }
}

/// Every zoo module of `B_n^ε` has `τ`-period dividing `2n - 1`.
pub fn tau_mbs<F: Field>(n: usize, eps: u8) -> Result<TauReport> {
    let b = Arc::new(modified_brauer_star::<F>(n, eps)?);
    let mut cases = Vec::new();
    for z in zoo(b)? {
        let pass = closes(&z.module, 2 * n - 1)?;
        cases.push(PeriodCase { algebra: format!("B_{n}^{eps}"), module: z.name, period: 2 * n - 1, pass });
    }
    Ok(report(cases))
}

/// Simples and radicals of projectives of `N_{n,m}` have `τ`-period `n`.
pub fn tau_nakayama<F: Field>(n: usize, m: usize) -> Result<TauReport> {
    let alg = Arc::new(nakayama::<F>(n, m)?);
    let mut cases = Vec::new();
    for i in 0..n {
        let s = Representation::simple(alg.clone(), i);
        let r = radical_of_projective(alg.clone(), i as i64 + 1)?;
        for (name, x) in [(format!("S_{}", i + 1), s), (format!("rad P_{}", i + 1), r)] {
            let pass = closes(&x, n)?;
            cases.push(PeriodCase { algebra: format!("N_{{{n},{m}}}"), module: name, period: n, pass });
        }
    }
    Ok(report(cases))
}

/// Inflated injectives `D(KQe_v)` over `Triv(KQ)` have `τ`-period `h - 1`.
pub fn tau_triv<F: Field>(name: &str, family: Family, rank: usize, q: &Quiver) -> Result<TauReport> {
    let kq = Arc::new(path_algebra::<F>(q)?);
    let tr = Arc::new(triv_kq::<F>(q)?);
    let period = coxeter_number(family, rank) - 1;
    let mut cases = Vec::new();
    for &v in q.vertices() {
        let m = inflate(&injective_kq(kq.clone(), v)?, tr.clone())?;
        let pass = closes(&m, period)?;
        cases.push(PeriodCase { algebra: format!("Triv(K{name})"), module: format!("D(KQe_{v})"), period, pass });
    }
    Ok(report(cases))
}

/// Linearly oriented `A_2`, `A_3` and `D_4` with the branch vertex `2`.
pub fn tau_quivers() -> Result<Vec<(&'static str, Family, usize, Quiver)>> {
    Ok(vec![
        ("A2", Family::A, 2, Quiver::from_triples(vec![1, 2], &[("a", 1, 2)])?),
        ("A3", Family::A, 3, Quiver::from_triples(vec![1, 2, 3], &[("a", 1, 2), ("b", 2, 3)])?),
        ("D4", Family::D, 4, Quiver::from_triples(vec![1, 2, 3, 4], &[("a", 1, 2), ("b", 2, 3), ("c", 2, 4)])?),
    ])
}

/// `τ`-periodicity on the zoo of `B_n` (`n ∈ {2,3}`), simples and radicals of
/// `N_{n,m}` (`n, m ≤ 3`) and inflated injectives over `Triv(KQ)`.
pub fn verify_tau_periodicity<F: Field>() -> Result<TauReport> {
    let mut cases = Vec::new();
    for n in 2..=3 {
        for eps in [0, 1] {
            cases.extend(tau_mbs::<F>(n, eps)?.cases);
        }
    }
    for n in 1..=3 {
        for m in 1..=3 {
            cases.extend(tau_nakayama::<F>(n, m)?.cases);
        }
    }
    for (name, family, rank, q) in tau_quivers()? {
        cases.extend(tau_triv::<F>(name, family, rank, &q)?.cases);
    }
    Ok(report(cases))
}

/// Whether the anchors of `B_n` lie in distinct orbits and `rad P_i` sits in row 1.
pub fn verify_mbs_rows<F: Field>(n: usize, eps: u8) -> Result<bool> {
    let b = Arc::new(modified_brauer_star::<F>(n, eps)?);
    let atlas = mbs_atlas(b.clone())?;
    if !atlas.overlapping_rows()?.is_empty() {
        return Ok(false);
    }
    for i in 2..=n as i64 {
        if atlas.row_label(&radical_of_projective(b.clone(), i)?)?.row != 1 {
            return Ok(false);
        }
    }
    let u = uniserial(b.clone(), 0, 1)?;
    is_isomorphic(&u, &Representation::simple(b, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Q, F2};

    #[test]
    fn endmbta_small() {
        assert!(verify_lemma_endmbta::<F2>(2, 0).unwrap().pass);
        assert!(verify_lemma_endmbta::<F2>(2, 1).unwrap().pass);
        let r = verify_lemma_endmbta::<Q>(3, 0).unwrap();
        assert_eq!(r.cases.len(), 2);
        assert!(r.pass);
    }

    #[test]
    fn six_cases() {
        let r = six_case_b2::<F2>(0).unwrap();
        let failing: Vec<&str> = r.cases.iter().filter(|c| !c.pass).map(|c| c.module.as_str()).collect();
        assert_eq!(failing, vec!["D"]);
        let d = r.cases.iter().find(|c| c.module == "D").unwrap();
        assert_eq!(d.corner_ext1, vec![vec![0, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]);
        assert!(d.certificate.is_none());
    }

    #[test]
    fn reduction_rows_n2_and_n3() {
        let two = verify_reduction_table::<F2>(2, 0).unwrap();
        assert!(two.pass);
        let h = &two.rows[0];
        assert_eq!((h.module.as_str(), h.fingerprint_match, h.tau_shift), ("H_{1,1}", false, Some(1)));
        let three = verify_reduction_table::<F2>(3, 0).unwrap();
        let failing: Vec<&str> = three.rows.iter().filter(|r| !r.pass).map(|r| r.module.as_str()).collect();
        assert_eq!(failing, vec!["H_{2,1}"]);
        let h21 = three.rows.iter().find(|r| r.module == "H_{2,1}").unwrap();
        assert!(h21.certificate.is_some());
        for row in &three.rows {
            assert_eq!(row.certificate.is_some(), row.module != "D", "{}", row.module);
        }
    }

    #[test]
    fn nakayama_small() {
        let r = verify_nakayama::<Q>(2, 2).unwrap();
        assert!(r.pass);
        assert!(!r.simple.pass);
    }

    #[test]
    fn mbs_rows() {
        assert!(verify_mbs_rows::<F2>(2, 0).unwrap());
    }
}
