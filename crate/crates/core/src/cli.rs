//! Command-line front end.
//!
//! Every subcommand takes either one inline index such as
//! `"0; -1; 2/1,3/1,7/1"` or `--batch FILE` with one index per line. Batch
//! mode always writes one JSON record per input line, in input order.
//!
//! Exit codes: 0 on success, 1 on domain or I/O errors, 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::asymptotics::leading_coefficient;
use crate::euler_class::{
    enumerate_realizable_equivalent, euler_class_of_index, jn_realizable, RealizabilityReport,
};
use crate::rational::{canonical, MAX_DECIMAL_DIGITS};
use crate::su11::{conjugacy_classes, enumerate_triples, verify_relations, DEFAULT_TOLERANCE};
use crate::SeifertIndex;

#[derive(Debug, Parser)]
#[command(
    name = "seifert",
    version,
    about = "Invariants of Seifert fibered 3-manifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal form, base orbifold, euler characteristic and π1 presentation.
    Info(Input),
    /// The index of the orientation-reversed manifold.
    Reverse(Input),
    /// Jankins-Neumann realizability of the index's euler class.
    EulerCheck(Input),
    /// Realizable classes in the same Ext(Γ;Z/2) class as the index.
    Lifts(Input),
    /// Leading coefficient of the torsion asymptotics.
    Asym(AsymInput),
    /// Admissible triples and SU(1,1) conjugacy classes (genus 0, three fibers).
    Su11Enum(Input),
    /// Residuals of the π1 relations for every SU(1,1) class.
    Su11Verify(Input),
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["index", "batch"])))]
struct Input {
    /// Seifert index `g; b; α1/β1, α2/β2, …`.
    index: Option<String>,
    /// File with one index per line; `#` starts a comment line.
    #[arg(long, value_name = "FILE")]
    batch: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Numerical tolerance for the SU(1,1) computations.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tol)]
    tol: f64,
}

#[derive(Debug, Clone, Args)]
struct AsymInput {
    #[command(flatten)]
    input: Input,
    /// Also print the decimal value of the coefficient times log 2.
    #[arg(long)]
    decimal: bool,
    /// Significant digits for `--decimal`.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..=MAX_DECIMAL_DIGITS as u64))]
    precision: u64,
}

fn parse_tol(s: &str) -> std::result::Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if t.is_finite() && t > 0.0 {
        Ok(t)
    } else {
        Err("tolerance must be a positive finite number".into())
    }
}

/// What a subcommand produced for one index.
struct Report {
    json: Value,
    text: String,
    /// False when the computation finished but found a failure to report,
    /// e.g. a relation residual above tolerance.
    ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Info,
    Reverse,
    EulerCheck,
    Lifts,
    Asym { decimal: Option<usize> },
    Su11Enum,
    Su11Verify,
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let stream: &mut dyn Write = if code == 0 { out } else { err };
            let _ = stream.write_all(rendered.as_bytes());
            return code;
        }
    };
    let (kind, input) = match cli.command {
        Command::Info(i) => (Kind::Info, i),
        Command::Reverse(i) => (Kind::Reverse, i),
        Command::EulerCheck(i) => (Kind::EulerCheck, i),
        Command::Lifts(i) => (Kind::Lifts, i),
        Command::Asym(a) => (
            Kind::Asym {
                decimal: a.decimal.then_some(a.precision as usize),
            },
            a.input,
        ),
        Command::Su11Enum(i) => (Kind::Su11Enum, i),
        Command::Su11Verify(i) => (Kind::Su11Verify, i),
    };

    match (&input.index, &input.batch) {
        (Some(s), None) => single(kind, s, &input, out, err),
        (None, Some(path)) => batch(kind, path, input.tol, out, err),
        _ => {
            let _ = writeln!(
                err,
                "error: give exactly one of an inline index or --batch FILE"
            );
            2
        }
    }
}

fn single(kind: Kind, raw: &str, input: &Input, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match evaluate(kind, raw, input.tol) {
        Ok(report) => {
            let written = if input.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("json values serialize")
                )
            } else {
                out.write_all(report.text.as_bytes())
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            if report.ok {
                0
            } else {
                let _ = writeln!(
                    err,
                    "error: verification failed at tolerance {:e}",
                    input.tol
                );
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn batch(kind: Kind, path: &PathBuf, tol: f64, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let contents = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return 1;
        }
    };
    for (n, line) in contents.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let record = match evaluate(kind, trimmed, tol) {
            Ok(report) => json!({ "line": n + 1, "input": trimmed, "result": report.json }),
            Err(e) => json!({ "line": n + 1, "input": trimmed, "error": e.to_string() }),
        };
        if let Err(e) = writeln!(out, "{record}") {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    }
    0
}

fn evaluate(kind: Kind, raw: &str, tol: f64) -> crate::Result<Report> {
    let given: SeifertIndex = raw.parse()?;
    let index = given.normalize();
    match kind {
        Kind::Info => Ok(info(&given, &index)),
        Kind::Reverse => Ok(reverse(&index)),
        Kind::EulerCheck => euler_check(&index),
        Kind::Lifts => lifts(&index),
        Kind::Asym { decimal } => Ok(asym(&index, decimal)),
        Kind::Su11Enum => su11_enum(&index, tol),
        Kind::Su11Verify => su11_verify(&index, tol),
    }
}

fn list<T: ToString>(items: &[T]) -> String {
    if items.is_empty() {
        "-".to_string()
    } else {
        items
            .iter()
            .map(T::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn info(given: &SeifertIndex, index: &SeifertIndex) -> Report {
    let sig = index.signature();
    let chi = canonical(&sig.euler_characteristic());
    let pi1 = index.pi1_presentation();
    let relators: Vec<String> = pi1.relators.iter().map(ToString::to_string).collect();
    let json = json!({
        "index": given.to_string(),
        "normalized": index.to_string(),
        "signature": { "genus": sig.genus(), "alpha": sig.branch_indices() },
        "euler_characteristic": chi,
        "hyperbolic": sig.is_hyperbolic(),
        "pi1": { "generators": pi1.generators, "relators": relators },
    });
    let mut text = String::new();
    let _ = writeln!(text, "index: {given}");
    let _ = writeln!(text, "normalized: {index}");
    let _ = writeln!(text, "signature: {sig}");
    let _ = writeln!(text, "euler characteristic: {chi}");
    let _ = writeln!(text, "hyperbolic: {}", sig.is_hyperbolic());
    let _ = writeln!(text, "pi1: {pi1}");
    Report {
        json,
        text,
        ok: true,
    }
}

fn reverse(index: &SeifertIndex) -> Report {
    let rev = index.orientation_reverse();
    Report {
        json: json!({ "index": index.to_string(), "reversed": rev.to_string() }),
        text: format!("{rev}\n"),
        ok: true,
    }
}

fn realizability_json(rep: &RealizabilityReport) -> Value {
    serde_json::to_value(rep).expect("report serializes")
}

fn realizability_text(text: &mut String, rep: &RealizabilityReport) {
    let _ = writeln!(text, "realizable: {}", rep.realizable);
    let _ = writeln!(text, "cases: {}", list(&rep.cases));
    if let Some(sum) = &rep.sum {
        let _ = writeln!(text, "sum: {}", canonical(sum));
    }
    let _ = writeln!(text, "flags: {}", list(&rep.flags));
}

fn euler_check(index: &SeifertIndex) -> crate::Result<Report> {
    let class = euler_class_of_index(index);
    let rep = jn_realizable(&class)?;
    let mut json = realizability_json(&rep);
    json["index"] = json!(index.to_string());
    json["class"] = serde_json::to_value(&class).expect("class serializes");
    let mut text = format!("class: {class}\n");
    realizability_text(&mut text, &rep);
    Ok(Report {
        json,
        text,
        ok: true,
    })
}

fn lifts(index: &SeifertIndex) -> crate::Result<Report> {
    let class = euler_class_of_index(index);
    let rep = jn_realizable(&class)?;
    let ledger = enumerate_realizable_equivalent(&class)?;
    let mut json = realizability_json(&rep);
    json["index"] = json!(index.to_string());
    json["class"] = serde_json::to_value(&class).expect("class serializes");
    json["equivalent_realizable"] =
        serde_json::to_value(&ledger.equivalent_realizable).expect("classes serialize");
    json["induces_sl2r"] = json!(ledger.induces_sl2r);
    let mut text = format!("class: {class}\n");
    realizability_text(&mut text, &rep);
    let _ = writeln!(
        text,
        "equivalent realizable: {}",
        ledger.equivalent_realizable.len()
    );
    for c in &ledger.equivalent_realizable {
        let _ = writeln!(text, "  {c}");
    }
    let _ = writeln!(text, "induces sl2r: {}", ledger.induces_sl2r);
    Ok(Report {
        json,
        text,
        ok: true,
    })
}

fn asym(index: &SeifertIndex, decimal: Option<usize>) -> Report {
    let mut report = leading_coefficient(index);
    if let Some(d) = decimal {
        report = report.with_decimal(d);
    }
    let mut json = serde_json::to_value(&report).expect("report serializes");
    json["index"] = json!(index.to_string());
    let mut text = String::new();
    let _ = writeln!(text, "lambdas: {}", list(&report.lambdas));
    let _ = writeln!(text, "coefficient: {} · log2", report.coefficient);
    if let Some(d) = &report.decimal {
        let _ = writeln!(text, "decimal: {d}");
    }
    let _ = writeln!(text, "quadratic limit: {}", report.quadratic_limit);
    let _ = writeln!(text, "minus chi log2: {}", report.equals_minus_chi_log2);
    let _ = writeln!(text, "flags: {}", list(&report.flags));
    Report {
        json,
        text,
        ok: true,
    }
}

fn su11_enum(index: &SeifertIndex, tol: f64) -> crate::Result<Report> {
    let triples = enumerate_triples(index)?;
    let mut ks: Vec<[u64; 3]> = triples.iter().map(|t| t.k).collect();
    ks.dedup();
    let classes = conjugacy_classes(index, tol)?;
    let json = json!({
        "index": index.to_string(),
        "triples": ks,
        "classes": classes.representations,
        "reducible_boundary": classes.reducible_boundary,
        "notes": classes.notes,
    });
    let mut text = String::new();
    let _ = writeln!(text, "triples: {}", ks.len());
    for k in &ks {
        let _ = writeln!(text, "  ({}, {}, {})", k[0], k[1], k[2]);
    }
    let _ = writeln!(text, "classes: {}", classes.representations.len());
    for rep in &classes.representations {
        let _ = writeln!(text, "  {}", rep.triple);
    }
    let _ = writeln!(
        text,
        "reducible boundary: {}",
        list(&classes.reducible_boundary)
    );
    Ok(Report {
        json,
        text,
        ok: true,
    })
}

fn su11_verify(index: &SeifertIndex, tol: f64) -> crate::Result<Report> {
    let classes = conjugacy_classes(index, tol)?;
    let mut results = Vec::new();
    let mut text = String::new();
    let mut ok = true;
    for rep in &classes.representations {
        let res = verify_relations(rep, tol);
        ok &= res.passed;
        let verdict = if res.passed { "pass" } else { "FAIL" };
        let _ = writeln!(
            text,
            "{}: {verdict} (max residual {:.1e})",
            rep.triple, res.max
        );
        results.push(json!({ "triple": rep.triple, "residuals": res }));
    }
    let _ = writeln!(text, "classes: {}, all pass: {ok}", results.len());
    let json = json!({
        "index": index.to_string(),
        "tolerance": tol,
        "results": results,
        "passed": ok,
    });
    Ok(Report { json, text, ok })
}
