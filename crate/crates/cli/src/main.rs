//! `gendo`: construct algebras, classify RFSy-types and run the verification
//! pipelines from the command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or invalid
//! input, 3 a construction failed.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gendo::acceptance;
use gendo::classifier::pipelines::{
    six_case_b2, tau_mbs, tau_nakayama, tau_quivers, tau_triv, verify_lemma_endmbta, verify_nakayama,
    verify_reduction_table, verify_tau_periodicity, TauReport,
};
use gendo::classifier::{classify, reproduce_tables, ClassifyOptions};
use gendo::constructions::coext::coext_vs_gendo_check;
use gendo::constructions::families::{modified_brauer_star, nakayama, path_algebra, triv_kq};
use gendo::graphs::{Family, Quiver, RFSyType};
use gendo::io::{algebra_to_json, quiver_from_json};
use gendo::{Error, Field, F2, F3, F5, Q};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "gendo", version, about = "Gendo-symmetric algebras of finite representation type")]
struct Cli {
    /// Seed for the randomized isomorphism and indecomposability tests.
    #[arg(long, global = true, default_value_t = gendo::modules::iso::DEFAULT_SEED)]
    seed: u64,
    /// Ground field.
    #[arg(long, global = true, value_enum, default_value_t = FieldArg::Q)]
    field: FieldArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    #[value(name = "Q")]
    Q,
    #[value(name = "F2")]
    F2,
    #[value(name = "F3")]
    F3,
    #[value(name = "F5")]
    F5,
}

#[derive(Subcommand)]
enum Command {
    /// Decide representation-finiteness for an RFSy-type and a vertex.
    Classify(ClassifyArgs),
    /// Build an algebra and write its structure-constant table as JSON.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Run a verification pipeline.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    /// A, D or E.
    #[arg(long)]
    family: String,
    #[arg(long)]
    rank: usize,
    /// Frequency: 1, 1/m or 1/3.
    #[arg(long)]
    f: String,
    #[arg(long)]
    vertex: i64,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    eps: u8,
    /// Skip the infiniteness certificate search.
    #[arg(long)]
    no_certify: bool,
    /// Write the report here and print a one-line summary instead.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct Output {
    /// Write the table here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the quiver in DOT format.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construct {
    /// Trivial extension of the path algebra of an acyclic quiver.
    TrivKq {
        #[arg(long)]
        quiver: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// `N_{n,m}`: the cyclic quiver on `n` vertices, paths of length `mn + 1` zero.
    Nakayama {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Modified Brauer star algebra `B_n^ε`.
    Mbs {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        eps: u8,
        #[command(flatten)]
        output: Output,
    },
    /// Path algebra of an acyclic quiver.
    Path {
        #[arg(long)]
        quiver: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Report {
    /// Write the JSON report here and print a one-line summary instead.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TauAlgebra {
    Mbs,
    Nakayama,
    Triv,
}

#[derive(Subcommand)]
enum Verify {
    /// `End(B_n ⊕ rad P_i)` against `B_{n+1}/soc P_{i+1}`.
    Endmbta {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        eps: u8,
        #[command(flatten)]
        report: Report,
    },
    /// Recompute the extension-graph tables and list the misprints.
    Tables {
        #[command(flatten)]
        report: Report,
    },
    /// The reduction table over `B_n`.
    Reduction {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        eps: u8,
        #[command(flatten)]
        report: Report,
    },
    /// One-point coextension against `End(Triv(KQ) ⊕ D(KQe_v))`.
    Coext {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        vertex: i64,
        #[command(flatten)]
        report: Report,
    },
    /// `τ`-periodicity; without `--algebra` runs the whole suite.
    Tau {
        #[arg(long, value_enum)]
        algebra: Option<TauAlgebra>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        eps: u8,
        #[command(flatten)]
        report: Report,
    },
    /// Gendo algebras over `N_{n,m}`.
    Nakayama {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        report: Report,
    },
    /// The six modules over `B_2^ε`.
    Sixcase {
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        eps: u8,
        #[command(flatten)]
        report: Report,
    },
    /// One acceptance criterion by number.
    Criterion {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=9))]
        id: u8,
        #[command(flatten)]
        report: Report,
    },
}

enum Failure {
    Check(String),
    Usage(String),
    Construction(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidType(_)
            | Error::UnknownVertex(_)
            | Error::UnknownArrow(_)
            | Error::InvalidGraph(_)
            | Error::EmptyGraph
            | Error::InvalidPresentation(_) => Failure::Usage(e.to_string()),
            _ => Failure::Construction(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

macro_rules! with_field {
    ($field:expr, $F:ident => $body:expr) => {
        match $field {
            FieldArg::Q => {
                type $F = Q;
                $body
            }
            FieldArg::F2 => {
                type $F = F2;
                $body
            }
            FieldArg::F3 => {
                type $F = F3;
                $body
            }
            FieldArg::F5 => {
                type $F = F5;
                $body
            }
        }
    };
}

fn write(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_quiver(path: &Path) -> Result<Quiver, Failure> {
    let s = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(quiver_from_json(&s)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Prints the report, or writes it to `--json` and prints `summary`.
fn emit(report: &Report, value: &Value, summary: &str) -> Outcome {
    match &report.json {
        Some(path) => {
            write(path, &pretty(value))?;
            println!("{summary}");
        }
        None => print!("{}", pretty(value)),
    }
    Ok(())
}

fn verdict(report: &Report, value: Value, pass: bool, first_failure: Option<String>) -> Outcome {
    emit(report, &value, if pass { "pass" } else { "fail" })?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Check(first_failure.unwrap_or_else(|| "check failed".into())))
    }
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn run_classify<F: Field>(a: &ClassifyArgs) -> Outcome {
    let family: Family = a.family.parse()?;
    let t = RFSyType::new(family, a.rank, RFSyType::parse_f(&a.f)?)?;
    let opts = ClassifyOptions { eps: a.eps, certify: !a.no_certify, ..ClassifyOptions::default() };
    let r = classify::<F>(&t, a.vertex, &opts)?;
    let recipe = r.representative.as_ref().map(|p| p.recipe.as_str()).unwrap_or("-");
    let summary = format!("{:?} {recipe}", r.verdict);
    emit(&Report { json: a.json.clone() }, &to_value(&r), &summary)
}

fn run_construct<F: Field>(c: &Construct) -> Outcome {
    let (alg, output) = match c {
        Construct::TrivKq { quiver, output } => (triv_kq::<F>(&read_quiver(quiver)?)?, output),
        Construct::Nakayama { n, m, output } => (nakayama::<F>(*n, *m)?, output),
        Construct::Mbs { n, eps, output } => (modified_brauer_star::<F>(*n, *eps)?, output),
        Construct::Path { quiver, output } => (path_algebra::<F>(&read_quiver(quiver)?)?, output),
    };
    let json = algebra_to_json(alg.table());
    match &output.out {
        Some(path) => {
            write(path, &format!("{json}\n"))?;
            println!("dim {}", alg.table().dim());
        }
        None => println!("{json}"),
    }
    if let Some(path) = &output.dot {
        write(path, &alg.quiver().to_dot())?;
    }
    Ok(())
}

fn tau_report<F: Field>(algebra: Option<TauAlgebra>, n: Option<usize>, m: Option<usize>, eps: u8) -> Result<TauReport, Failure> {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| Failure::Usage(format!("--{flag} is required")));
    Ok(match algebra {
        None => verify_tau_periodicity::<F>()?,
        Some(TauAlgebra::Mbs) => tau_mbs::<F>(need(n, "n")?, eps)?,
        Some(TauAlgebra::Nakayama) => tau_nakayama::<F>(need(n, "n")?, need(m, "m")?)?,
        Some(TauAlgebra::Triv) => {
            let mut cases = Vec::new();
            for (name, family, rank, q) in tau_quivers()? {
                cases.extend(tau_triv::<F>(name, family, rank, &q)?.cases);
            }
            let pass = cases.iter().all(|c| c.pass);
            TauReport { cases, pass }
        }
    })
}

fn run_verify<F: Field>(v: &Verify) -> Outcome {
    match v {
        Verify::Endmbta { n, eps, report } => {
            let r = verify_lemma_endmbta::<F>(*n, *eps)?;
            let first = r.cases.iter().find(|c| !c.pass).map(|c| format!("{c:?}"));
            verdict(report, to_value(&r), r.pass, first)
        }
        Verify::Tables { report } => {
            let r = reproduce_tables()?;
            verdict(report, to_value(&r), r.pass, Some("table entries disagree with the recognizer".into()))
        }
        Verify::Reduction { n, eps, report } => {
            let r = verify_reduction_table::<F>(*n, *eps)?;
            let first = r.rows.iter().find(|c| !c.pass).map(|c| format!("row {} does not match {}", c.module, c.tabulated));
            verdict(report, to_value(&r), r.pass, first)
        }
        Verify::Coext { quiver, vertex, report } => {
            let r = coext_vs_gendo_check::<F>(&read_quiver(quiver)?, *vertex)?;
            verdict(report, to_value(&r), r.pass, Some(format!("fingerprints differ at vertex {vertex}")))
        }
        Verify::Tau { algebra, n, m, eps, report } => {
            let r = tau_report::<F>(*algebra, *n, *m, *eps)?;
            let first = r.cases.iter().find(|c| !c.pass).map(|c| format!("{} {} period {}", c.algebra, c.module, c.period));
            verdict(report, to_value(&r), r.pass, first)
        }
        Verify::Nakayama { n, m, report } => {
            let r = verify_nakayama::<F>(*n, *m)?;
            verdict(report, to_value(&r), r.pass, Some(format!("radical row of N_{{{n},{m}}}")))
        }
        Verify::Sixcase { eps, report } => {
            let r = six_case_b2::<F>(*eps)?;
            let first = r.cases.iter().find(|c| !c.pass).map(|c| format!("module {}", c.module));
            verdict(report, to_value(&r), r.pass, first)
        }
        Verify::Criterion { id, report } => {
            let o = acceptance::run(*id)?;
            emit(report, &to_value(&o), &o.line())?;
            if o.pass {
                Ok(())
            } else {
                Err(Failure::Check(o.failures.first().cloned().unwrap_or_else(|| "time budget exceeded".into())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    gendo::modules::set_seed(cli.seed);
    let result = match &cli.command {
        Command::Classify(a) => with_field!(cli.field, F => run_classify::<F>(a)),
        Command::Construct { what } => with_field!(cli.field, F => run_construct::<F>(what)),
        Command::Verify { what } => with_field!(cli.field, F => run_verify::<F>(what)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Construction(msg)) => {
            eprintln!("construction failed: {msg}");
            ExitCode::from(3)
        }
    }
}
