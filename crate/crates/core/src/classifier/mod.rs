//! Decision procedure for `End_B(B ⊕ M)` over a representation-finite
//! symmetric `B` of type `(Δ, f)` and `M` in the `τ`-orbit of row `v`.

pub mod certificate;
pub mod pipelines;
pub mod tables;

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{fingerprint, AlgebraTable, Fingerprint, QuiverAlgebra};
use crate::constructions::coext::extend_quiver;
use crate::constructions::endo::gendo_algebra;
use crate::constructions::families::{modified_brauer_star, nakayama, path_algebra, triv_kq};
use crate::constructions::triv::{inflate, injective_kq};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{canonical_automorphism, extension_graph, recognize, Arrow, Family, GraphClass, MarkedGraph, Quiver, RFSyType};
use crate::modules::orbit::uniserial;
use crate::modules::syzygy::syzygy;
use crate::modules::Representation;
use crate::modules::zoo::zoo;

pub use certificate::{certify_infinite, search_certificate, InfinitenessCertificate};
pub use tables::{reproduce_tables, TableDiff, TablesReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Finite,
    InfiniteTame,
    Wild,
    /// Representation-infinite, with no claim about tame or wild.
    Infinite,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationInput {
    pub family: String,
    pub rank: usize,
    pub f: String,
    pub vertex: i64,
    /// `vertex` and its image under the graph automorphism.
    pub rows: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Representative {
    pub recipe: String,
    /// Present when the algebra was built.
    pub dim: Option<usize>,
    pub fingerprint: Option<Fingerprint>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub input: ClassificationInput,
    pub verdict: Verdict,
    /// Recognized type of `Δ^v` when `f = 1`.
    pub extension: Option<String>,
    pub representative: Option<Representative>,
    pub certificate: Option<InfinitenessCertificate>,
    /// `M` or `ΩM`: the module whose gendo algebra carries the certificate.
    /// `Ω` is a stable equivalence of Morita type and preserves the
    /// representation type of `End(B ⊕ -)`.
    pub certified_module: Option<String>,
    pub reason: String,
    pub table_diffs: Vec<TableDiff>,
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub eps: u8,
    /// Build the representative when within the size bounds.
    pub construct: bool,
    /// Search for an infiniteness certificate on small instances.
    pub certify: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { eps: 0, construct: true, certify: true }
    }
}

/// `Δ` with every edge `{i, j}`, `i < j`, oriented `i → j`.
pub fn oriented(delta: &MarkedGraph) -> Result<Quiver> {
    let arrows = delta
        .edges()
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| Arrow { id: format!("c{k}"), src: a.min(b), tgt: a.max(b) })
        .collect();
    Quiver::new(delta.vertices().to_vec(), arrows)
}

/// `Triv(KQ')/soc P_x` for `Q'` the extension of the oriented `Δ` at `v`.
pub fn triv_extension_quotient<F: Field>(delta: &MarkedGraph, v: i64) -> Result<AlgebraTable<F>> {
    let (q2, x) = extend_quiver(&oriented(delta)?, v)?;
    triv_kq::<F>(&q2)?.table().quotient_by_socle(x)
}

/// `End_{Triv(KQ)}(Triv(KQ) ⊕ D(KQe_v))` for the oriented `Δ`.
pub fn triv_gendo<F: Field>(delta: &MarkedGraph, v: i64) -> Result<AlgebraTable<F>> {
    let q = oriented(delta)?;
    let kq = Arc::new(path_algebra::<F>(&q)?);
    let triv = Arc::new(triv_kq::<F>(&q)?);
    let m = inflate(&injective_kq(kq, v)?, triv.clone())?;
    Ok(gendo_algebra(triv, &[m])?.gendo.table)
}

fn built<F: Field>(recipe: String, table: Option<Result<AlgebraTable<F>>>) -> Result<Representative> {
    match table {
        Some(t) => {
            let t = t?;
            Ok(Representative { recipe, dim: Some(t.dim()), fingerprint: Some(fingerprint(&t)?) })
        }
        None => Ok(Representative { recipe, dim: None, fingerprint: None }),
    }
}

fn extra_vertex<F: Field>(t: &AlgebraTable<F>) -> i64 {
    t.vertices().iter().copied().max().unwrap_or(0)
}

/// Certificate on `End(B ⊕ M)`, falling back to `End(B ⊕ ΩM)`.
fn certify_module<F: Field>(
    alg: Arc<QuiverAlgebra<F>>,
    m: Representation<F>,
    report: &mut ClassificationReport,
) -> Result<()> {
    let omega = syzygy(&m)?;
    for (name, module) in [("M", m), ("ΩM", omega)] {
        let g = gendo_algebra(alg.clone(), &[module])?.gendo.table;
        if let Some(c) = search_certificate(&g, extra_vertex(&g))? {
            report.certificate = Some(c);
            report.certified_module = Some(name.into());
            return Ok(());
        }
    }
    Ok(())
}

pub fn classify<F: Field>(t: &RFSyType, v: i64, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    if !t.delta.contains(v) {
        return Err(Error::UnknownVertex(v));
    }
    let mut rows = vec![v];
    if let Some(img) = canonical_automorphism(t.family, t.rank).and_then(|m| m.get(&v).copied()) {
        if img != v {
            rows.push(img);
        }
    }
    rows.sort_unstable();
    let input = ClassificationInput {
        family: t.family.to_string(),
        rank: t.rank,
        f: if t.f_inv == 1 { "1".into() } else { format!("1/{}", t.f_inv) },
        vertex: v,
        rows,
    };
    let mut report = ClassificationReport {
        input,
        verdict: Verdict::Infinite,
        extension: None,
        representative: None,
        certificate: None,
        certified_module: None,
        reason: String::new(),
        table_diffs: Vec::new(),
    };
    match (t.family, t.f_inv) {
        (_, 1) => classify_untwisted::<F>(t, v, opts, &mut report)?,
        (Family::A, m) => classify_nakayama::<F>(t, v, m, opts, &mut report)?,
        (Family::D, 3) => classify_mbs::<F>(t, v, opts, &mut report)?,
        _ => return Err(Error::InvalidType(format!("{t} is not an admissible shape"))),
    }
    Ok(report)
}

fn classify_untwisted<F: Field>(t: &RFSyType, v: i64, opts: &ClassifyOptions, report: &mut ClassificationReport) -> Result<()> {
    let ext = extension_graph(&t.delta, v)?;
    let class = recognize(&ext)?;
    report.extension = Some(class.to_string());
    if let Ok(diffs) = reproduce_tables() {
        report.table_diffs = diffs
            .diffs
            .into_iter()
            .filter(|d| d.family == t.family.to_string() && d.rank == t.rank && d.vertex as i64 == v)
            .collect();
    }
    match class {
        GraphClass::Dynkin(fam, n) => {
            report.verdict = Verdict::Finite;
            report.reason = format!("Δ^v = {fam}{n} is Dynkin");
            let recipe = format!("Triv(KQ')/soc P_x with Q' of type {fam}{n}");
            let table = (opts.construct && t.rank < 9).then(|| triv_extension_quotient::<F>(&t.delta, v));
            report.representative = Some(built(recipe, table)?);
        }
        GraphClass::Euclidean(..) | GraphClass::Other => {
            let tame = class.is_euclidean();
            report.verdict = if tame { Verdict::InfiniteTame } else { Verdict::Wild };
            report.reason = format!("Δ^v = {class} is {}", if tame { "Euclidean" } else { "neither Dynkin nor Euclidean" });
            if opts.certify && t.rank <= 5 {
                let g = triv_gendo::<F>(&t.delta, v)?;
                report.certificate = search_certificate(&g, extra_vertex(&g))?;
            }
        }
    }
    Ok(())
}

fn classify_nakayama<F: Field>(t: &RFSyType, v: i64, m: usize, opts: &ClassifyOptions, report: &mut ClassificationReport) -> Result<()> {
    let n = t.rank / m;
    let top = t.rank as i64;
    if v == 1 || v == top {
        report.verdict = Verdict::Finite;
        report.reason = format!("row {v} is an end of A_{top}");
        let recipe = format!("N_{{{},{m}}}/soc P", n + 1);
        let table = (opts.construct && n < 5 && m <= 5)
            .then(|| nakayama::<F>(n + 1, m).and_then(|a| a.table().quotient_by_socle(1)));
        report.representative = Some(built(recipe, table)?);
    } else {
        report.reason = format!("only rows 1 and {top} are finite");
        if opts.certify && n <= 3 && m <= 3 {
            let alg = Arc::new(nakayama::<F>(n, m)?);
            let mv = uniserial(alg.clone(), 0, v as usize)?;
            certify_module(alg, mv, report)?;
        }
    }
    Ok(())
}

fn classify_mbs<F: Field>(t: &RFSyType, v: i64, opts: &ClassifyOptions, report: &mut ClassificationReport) -> Result<()> {
    let r = t.rank / 3;
    let eps = opts.eps;
    if v == 1 {
        report.verdict = Verdict::Finite;
        report.reason = "row 1 is the orbit of rad P_i".into();
        let recipe = format!("B_{}^{eps}/soc P_3", r + 1);
        let table = (opts.construct && r < 5)
            .then(|| modified_brauer_star::<F>(r + 1, eps).and_then(|a| a.table().quotient_by_socle(3)));
        report.representative = Some(built(recipe, table)?);
    } else {
        report.reason = "only row 1 is finite".into();
        if opts.certify && r <= 3 {
            let alg = Arc::new(modified_brauer_star::<F>(r, eps)?);
            let m = zoo(alg.clone())?
                .into_iter()
                .find(|z| z.row as i64 == v)
                .ok_or_else(|| Error::OrbitMismatch(format!("no anchor in row {v}")))?;
            certify_module(alg, m.module, report)?;
            if report.certificate.is_none() && v == 3 * r as i64 {
                report.reason = format!(
                    "only row 1 is finite; row {v} is exchanged with row {} by a stable autoequivalence, no direct certificate",
                    3 * r - 1
                );
            }
        }
    }
    Ok(())
}

/// Elementwise classification of a row set.
pub fn classify_rows<F: Field>(t: &RFSyType, rows: &[i64], opts: &ClassifyOptions) -> Result<Vec<ClassificationReport>> {
    rows.iter().map(|&v| classify::<F>(t, v, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::coext::coext_vs_gendo_check;
    use crate::field::{Q, F2};

    fn ty(f: Family, n: usize, m: usize) -> RFSyType {
        RFSyType::new(f, n, m).unwrap()
    }

    #[test]
    fn a5_middle_is_finite_of_type_e6() {
        let r = classify::<Q>(&ty(Family::A, 5, 1), 3, &ClassifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Finite);
        assert_eq!(r.extension.as_deref(), Some("E6"));
        let rep = r.representative.unwrap();
        assert!(rep.recipe.contains("E6"));
        assert_eq!(rep.fingerprint.unwrap().vertices, 6);
    }

    #[test]
    fn nakayama_ends_are_finite() {
        let r = classify::<Q>(&ty(Family::A, 4, 2), 1, &ClassifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Finite);
        assert_eq!(r.representative.as_ref().unwrap().recipe, "N_{3,2}/soc P");
        assert_eq!(r.input.rows, vec![1, 4]);
        let inner = classify::<Q>(&ty(Family::A, 4, 2), 2, &ClassifyOptions::default()).unwrap();
        assert_eq!(inner.verdict, Verdict::Infinite);
        assert_eq!(inner.certified_module.as_deref(), Some("ΩM"));
        assert!(inner.certificate.unwrap().revalidate().unwrap());
        let three = classify::<Q>(&ty(Family::A, 4, 2), 3, &ClassifyOptions::default()).unwrap();
        assert_eq!(three.certified_module.as_deref(), Some("M"));
    }

    #[test]
    fn d6_rows() {
        let t = ty(Family::D, 6, 3);
        let r = classify::<F2>(&t, 1, &ClassifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Finite);
        assert!(r.representative.unwrap().recipe.starts_with("B_3"));
        for v in 2..=6 {
            let r = classify::<F2>(&t, v, &ClassifyOptions::default()).unwrap();
            assert_eq!(r.verdict, Verdict::Infinite, "row {v}");
            assert_eq!(r.certificate.is_some(), v != 6, "row {v}");
        }
    }

    #[test]
    fn untwisted_small_cases() {
        let r = classify::<Q>(&ty(Family::A, 1, 1), 1, &ClassifyOptions::default()).unwrap();
        assert_eq!((r.verdict, r.extension.as_deref()), (Verdict::Finite, Some("A2")));
        let d4 = classify::<Q>(&ty(Family::D, 4, 1), 2, &ClassifyOptions::default()).unwrap();
        assert_eq!(d4.verdict, Verdict::InfiniteTame);
        let wild = classify::<Q>(&ty(Family::A, 8, 1), 5, &ClassifyOptions::default()).unwrap();
        assert_eq!(wild.verdict, Verdict::Wild);
        assert_eq!(wild.table_diffs.len(), 1);
        assert!(classify::<Q>(&ty(Family::A, 3, 1), 9, &ClassifyOptions::default()).is_err());
    }

    #[test]
    fn finite_untwisted_representatives_match_the_gendo_algebra() {
        for n in 2..=5 {
            let t = ty(Family::A, n, 1);
            for v in 1..=n as i64 {
                let r = classify::<Q>(&t, v, &ClassifyOptions::default()).unwrap();
                assert_eq!(r.verdict, Verdict::Finite);
                let q = oriented(&t.delta).unwrap();
                let check = coext_vs_gendo_check::<Q>(&q, v).unwrap();
                assert!(check.pass);
                assert_eq!(r.representative.unwrap().fingerprint.unwrap(), check.gendo);
            }
        }
    }
}
