//! Replays the checked-in fuzz corpus through every parser. Seeds named
//! `valid_*` must parse and round-trip; `invalid_*` must be rejected.

use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use gendo::algebra::algebra_from_presentation;
use gendo::constructions::families::modified_brauer_star;
use gendo::graphs::{Family, RFSyType};
use gendo::io::*;
use gendo::{Field, Result, F2, F3, F5, Q};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(out.iter().any(|(n, _)| n.starts_with("valid_")), "{target} has no valid seed");
    out
}

fn replay(target: &str, parse: impl Fn(&str) -> Result<()>) {
    for (name, text) in seeds(target) {
        let r = parse(&text);
        if name.starts_with("valid_") {
            assert!(r.is_ok(), "{target}/{name}: {:?}", r.err());
        } else {
            assert!(r.is_err(), "{target}/{name} was accepted");
        }
    }
}

#[test]
fn graph_seeds() {
    replay("graph_json", |s| {
        let g = graph_from_json(s)?;
        assert_eq!(graph_from_json(&graph_to_json(&g))?.edges(), g.edges());
        Ok(())
    });
}

#[test]
fn quiver_seeds() {
    replay("quiver_json", |s| {
        let q = quiver_from_json(s)?;
        assert_eq!(quiver_from_json(&quiver_to_json(&q))?.arrows(), q.arrows());
        Ok(())
    });
}

#[test]
fn presentation_seeds() {
    replay("presentation_json", |s| {
        let p = presentation_from_json::<Q>(s)?;
        presentation_from_json::<Q>(&presentation_to_json(&p))?;
        algebra_from_presentation(&p).map(|_| ())
    });
}

#[test]
fn algebra_seeds() {
    replay("algebra_json", |s| {
        let field = s.split("\"field\"").nth(1).unwrap_or("");
        if field.trim_start_matches([' ', ':']).starts_with("\"F2\"") {
            let a = algebra_from_json::<F2>(s)?;
            assert_eq!(algebra_from_json::<F2>(&algebra_to_json(&a))?.dim(), a.dim());
        } else {
            let a = algebra_from_json::<Q>(s)?;
            assert_eq!(algebra_from_json::<Q>(&algebra_to_json(&a))?.dim(), a.dim());
            a.radical_vectors()?;
        }
        Ok(())
    });
}

#[test]
fn module_seeds() {
    let b = Arc::new(modified_brauer_star::<F2>(2, 1).unwrap());
    replay("module_json", |s| {
        let m = module_from_json(s, b.clone())?;
        assert_eq!(module_from_json(&module_to_json(&m, "B_2^1"), b.clone())?.dims(), m.dims());
        Ok(())
    });
}

fn round_trip<F: Field>(s: &str) -> Result<()> {
    let x = F::parse(s)?;
    assert_eq!(F::parse(&x.to_string())?, x);
    Ok(())
}

#[test]
fn scalar_seeds() {
    replay("scalar", |s| {
        for r in [round_trip::<F2>(s), round_trip::<F3>(s), round_trip::<F5>(s)] {
            if r.is_ok() {
                round_trip::<Q>(s)?;
            }
        }
        round_trip::<Q>(s)
    });
}

#[test]
fn rfsy_type_seeds() {
    replay("rfsy_type", |s| {
        let parts: Vec<&str> = s.split_whitespace().collect();
        let family: Family = parts[0].parse()?;
        let rank: usize = parts[1].parse().map_err(|_| gendo::Error::Parse(parts[1].into()))?;
        RFSyType::new(family, rank, RFSyType::parse_f(parts[2])?).map(|_| ())
    });
}
