//! Text and JSON forms of the command-line reports.

use std::fmt::Write as _;

use pgeo_core::axioms::AxiomReport;
use pgeo_core::extension::{CotransReport, ExtensionReport, Field, LlpoOutcome, LlpoReport, Pencil};
use serde::Serialize;

use crate::script::eval::RunReport;

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn run_text(r: &RunReport) -> String {
    let mut s = String::new();
    for line in &r.printed {
        let _ = writeln!(s, "{line}");
    }
    for a in &r.assertions {
        if a.pass {
            let _ = writeln!(s, "ok    {}", a.source);
        } else {
            let _ = writeln!(s, "FAIL  {}  [{}]", a.source, a.values.join(", "));
        }
    }
    for e in &r.errors {
        let _ = writeln!(s, "error {}:{} {}: {}", e.line, e.column, e.error, e.message);
    }
    s
}

#[derive(Serialize)]
struct AxiomLine<'a> {
    name: &'a str,
    checks: usize,
    failures: usize,
}

#[derive(Serialize)]
struct AxiomsJson<'a> {
    trials: usize,
    seed: u64,
    bound: i64,
    passed: bool,
    results: Vec<AxiomLine<'a>>,
}

pub fn axioms_json(r: &AxiomReport) -> String {
    json(&AxiomsJson {
        trials: r.trials,
        seed: r.seed,
        bound: r.bound,
        passed: r.passed(),
        results: r.results.iter().map(|x| AxiomLine { name: &x.name, checks: x.checks, failures: x.failures }).collect(),
    })
}

pub fn axioms_text(r: &AxiomReport) -> String {
    let mut s = format!("trials {} seed {} bound {}\n", r.trials, r.seed, r.bound);
    for x in &r.results {
        let mark = if x.failures == 0 { "ok" } else { "FAIL" };
        let _ = writeln!(s, "{:<16} {:>6} checks {:>4} failures  {mark}", x.name, x.checks, x.failures);
    }
    let _ = writeln!(s, "{} checks, {} failures", r.checks(), r.failures());
    s
}

fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "rational".into(),
        Field::Prime(q) => format!("f{q}"),
    }
}

#[derive(Serialize)]
struct ExtensionJson<'a> {
    field: String,
    e_points: usize,
    e_lines: usize,
    points_per_line: Option<usize>,
    join_pairs: usize,
    meet_pairs: usize,
    cotransitivity_triples: usize,
    passed: bool,
    failures: &'a [String],
}

pub fn extension_json(r: &ExtensionReport) -> String {
    json(&ExtensionJson {
        field: field_name(r.field),
        e_points: r.e_points,
        e_lines: r.e_lines,
        points_per_line: r.points_per_line,
        join_pairs: r.join_pairs,
        meet_pairs: r.meet_pairs,
        cotransitivity_triples: r.cotransitivity_triples,
        passed: r.passed(),
        failures: &r.failures,
    })
}

pub fn extension_text(r: &ExtensionReport) -> String {
    let mut s = format!("plane {}\n", field_name(r.field));
    if r.e_points > 0 {
        let _ = writeln!(s, "e-points {}  e-lines {}", r.e_points, r.e_lines);
    }
    if let Some(k) = r.points_per_line {
        let _ = writeln!(s, "e-points per e-line {k}");
    }
    let _ = writeln!(s, "join pairs {}  meet pairs {}", r.join_pairs, r.meet_pairs);
    if r.cotransitivity_triples > 0 {
        let _ = writeln!(s, "cotransitivity triples {}", r.cotransitivity_triples);
    }
    for f in &r.failures {
        let _ = writeln!(s, "FAIL {f}");
    }
    let _ = writeln!(s, "{}", if r.passed() { "passed" } else { "failed" });
    s
}

fn outcome_text(o: &LlpoOutcome) -> String {
    match o {
        LlpoOutcome::Meet(p) => format!("meet {p}"),
        LlpoOutcome::IdenticalLines => "identical lines".into(),
    }
}

#[derive(Serialize)]
struct LlpoJson {
    alpha: String,
    lambda: String,
    mu: String,
    outcome: String,
}

pub fn llpo_json(r: &LlpoReport) -> String {
    json(&LlpoJson {
        alpha: r.alpha.to_string(),
        lambda: r.lambda.to_string(),
        mu: r.mu.to_string(),
        outcome: outcome_text(&r.outcome),
    })
}

pub fn llpo_text(r: &LlpoReport) -> String {
    format!("alpha {}\nlambda {}\nmu {}\n{}\n", r.alpha, r.lambda, r.mu, outcome_text(&r.outcome))
}

fn pencil_text(p: &Pencil) -> String {
    match p {
        Pencil::PointPencil(q) => format!("point pencil {q}"),
        Pencil::ParallelPencil(l) => format!("parallel class of {l}"),
    }
}

#[derive(Serialize)]
struct CotransJson {
    c: String,
    p: String,
    gamma: String,
    branch: String,
}

pub fn cotrans_json(r: &CotransReport) -> String {
    json(&CotransJson { c: r.c.to_string(), p: r.p.to_string(), gamma: pencil_text(&r.gamma), branch: r.branch.to_string() })
}

pub fn cotrans_text(r: &CotransReport) -> String {
    format!("c {}\np {}\ngamma {}\n{}\n", r.c, r.p, pencil_text(&r.gamma), r.branch)
}
