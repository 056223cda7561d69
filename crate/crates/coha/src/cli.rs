//! Command-line front end: verification suites, single-operator application,
//! Cartan matrix extraction, and deterministic text or JSON reports.
//!
//! Exit codes: 0 when every executed check passed, 1 when a check failed,
//! 2 on usage errors (unknown names, malformed input, out-of-range sizes).
//! Reports are deterministic up to the `elapsed_ms` timing field.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::exterior::{
    basis, d_right, multiply_ed_power, to_schur, truncate, ExteriorElement,
};
use crate::localization::{lower_via_transpose, raise_localized};
use crate::operators::{
    chevalley_generators, grading_h, lemma_action_table, lower, projected_generators, raise,
    twisted_lower, GradedOperator,
};
use crate::partitions::{
    partition_to_index, partitions_in_box, BoxShape, Partition, WedgeIndex,
};
use crate::rational::parse_rational;
use crate::relations::{
    cartan_d, check_clifford, check_serre, extract_cartan, Counterexample, Status,
    VerificationReport,
};
use crate::symfunc::{verify_he_duality, verify_transpose_identity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "coha",
    version,
    about = "Exact wedge-operator calculus on Grassmannian cohomology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one verification suite.
    Verify {
        /// One of: serre, clifford, lemma-actions, transpose, he-duality,
        /// equivalence, kernel.
        subcheck: String,
        /// Rank of the exterior algebra / ambient dimension.
        #[arg(long)]
        n: usize,
    },
    /// Apply a single operator to an element and print the image.
    Apply {
        /// Operator name: raise:i, lower:i, tlower:i, H, T:i, S:i, E:i, F:i, Hi:i.
        #[arg(long)]
        op: String,
        /// Input element: a comma list of generator indices ("0,1", "" for the
        /// unit) or full element text ("+1 * [0,1] -1/2 * [2]").
        #[arg(long)]
        state: String,
        /// Rank of the exterior algebra.
        #[arg(long)]
        n: usize,
    },
    /// Extract the Cartan matrix from the commutators and compare it with
    /// the type-D reference.
    Cartan {
        /// Rank; the matrices have n+1 nodes.
        #[arg(long)]
        n: usize,
    },
    /// Run every verification suite and report each result.
    ReportAll {
        /// Size for all suites; defaults to each suite's standard sweep size.
        #[arg(long)]
        n: Option<usize>,
    },
}

const SUITES: [&str; 7] = [
    "serre",
    "clifford",
    "lemma-actions",
    "transpose",
    "he-duality",
    "equivalence",
    "kernel",
];

/// Desk-scale size cap per suite; `COHA_MAX_N` overrides all of them.
fn default_cap(subcheck: &str) -> usize {
    match subcheck {
        "serre" => 8,
        "clifford" => 12,
        "lemma-actions" => 10,
        "transpose" => 6,
        "he-duality" => 8,
        "equivalence" => 6,
        "kernel" => 10,
        other => unreachable!("unknown suite {other}"),
    }
}

/// Size each suite runs at under `report-all` without an explicit `--n`.
fn default_size(subcheck: &str) -> usize {
    match subcheck {
        "serre" => 6,
        "clifford" => 10,
        "lemma-actions" => 6,
        "transpose" => 5,
        "he-duality" => 6,
        "equivalence" => 5,
        "kernel" => 5,
        other => unreachable!("unknown suite {other}"),
    }
}

fn effective_cap(subcheck: &str) -> Result<usize, String> {
    match std::env::var("COHA_MAX_N") {
        Err(_) => Ok(default_cap(subcheck)),
        Ok(raw) => raw
            .parse()
            .map_err(|_| format!("COHA_MAX_N must be a positive integer, got {raw:?}")),
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    run_with_args(std::env::args_os())
}

/// Testable entry point; returns the process exit code.
pub fn run_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = err.exit_code();
            let _ = err.print();
            return code;
        }
    };
    let dispatch = || match &cli.command {
        Command::Verify { subcheck, n } => cmd_verify(subcheck, *n, cli.format),
        Command::Apply { op, state, n } => cmd_apply(op, state, *n, cli.format),
        Command::Cartan { n } => cmd_cartan(*n, cli.format),
        Command::ReportAll { n } => cmd_report_all(*n, cli.format),
    };
    match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(pool) => pool.install(dispatch),
        Err(_) => dispatch(),
    }
}

fn cmd_verify(subcheck: &str, n: usize, format: Format) -> i32 {
    if !SUITES.contains(&subcheck) {
        return usage_error(&format!(
            "unknown subcheck {subcheck:?}; expected one of {}",
            SUITES.join(", ")
        ));
    }
    if n == 0 {
        return usage_error("--n must be at least 1");
    }
    let cap = match effective_cap(subcheck) {
        Ok(cap) => cap,
        Err(msg) => return usage_error(&msg),
    };
    if n > cap {
        return usage_error(&format!(
            "--n {n} exceeds the {subcheck} cap of {cap}; set COHA_MAX_N to raise it"
        ));
    }
    let report = run_suite(subcheck, n);
    emit_report(&report, format);
    i32::from(report.status == Status::Fail)
}

fn run_suite(subcheck: &str, n: usize) -> VerificationReport {
    match subcheck {
        "serre" => check_serre(n),
        "clifford" => check_clifford(n),
        "lemma-actions" => lemma_action_table(n),
        "transpose" => suite_transpose(n),
        "he-duality" => suite_he_duality(n),
        "equivalence" => suite_equivalence(n),
        "kernel" => suite_kernel(n),
        other => unreachable!("unknown suite {other}"),
    }
}

fn emit_report(report: &VerificationReport, format: Format) {
    match format {
        Format::Text => println!("{report}"),
        Format::Json => println!("{}", report_json(report)),
    }
}

/// Renders a report with the fixed key set
/// check/n/status/relations_checked/counterexamples/elapsed_ms.
fn report_json(report: &VerificationReport) -> serde_json::Value {
    let n: u64 = report
        .params
        .get("n")
        .and_then(|v| v.parse().ok())
        .expect("every suite records n");
    json!({
        "check": report.check,
        "n": n,
        "status": report.status.as_str(),
        "relations_checked": report.relations_checked,
        "counterexamples": report
            .counterexamples
            .iter()
            .map(|ce| json!({
                "relation": ce.relation,
                "witness": ce.witness,
                "lhs": ce.lhs,
                "rhs": ce.rhs,
            }))
            .collect::<Vec<_>>(),
        "elapsed_ms": report.elapsed.as_millis() as u64,
    })
}

fn cmd_apply(op: &str, state: &str, n: usize, format: Format) -> i32 {
    if n == 0 {
        return usage_error("--n must be at least 1");
    }
    let operator = match parse_operator(op, n) {
        Ok(op) => op,
        Err(msg) => return usage_error(&msg),
    };
    let element = match parse_element(state, n) {
        Ok(e) => e,
        Err(msg) => return usage_error(&msg),
    };
    let image = operator.apply(&element);
    match format {
        Format::Text => println!("{image}"),
        Format::Json => println!(
            "{}",
            json!({"op": op, "state": state, "n": n, "result": image.to_string()})
        ),
    }
    0
}

fn cmd_cartan(n: usize, format: Format) -> i32 {
    if n < 2 {
        return usage_error("cartan needs --n at least 2");
    }
    let extracted = match extract_cartan(n) {
        Ok(m) => m,
        Err(err) => {
            eprintln!("error: {err}");
            return 1;
        }
    };
    let reference = cartan_d(n + 1).expect("n + 1 >= 3");
    let equal = extracted == reference;
    match format {
        Format::Text => {
            println!("matrix read from [H_i, E_j] at rank {n}:");
            println!("{extracted}");
            println!("type D reference with {} nodes:", n + 1);
            println!("{reference}");
            println!("verdict: {}", if equal { "EQUAL" } else { "DIFFERENT" });
        }
        Format::Json => println!(
            "{}",
            json!({
                "check": "cartan",
                "n": n,
                "extracted": extracted.rows(),
                "reference": reference.rows(),
                "equal": equal,
            })
        ),
    }
    i32::from(!equal)
}

fn cmd_report_all(n: Option<usize>, format: Format) -> i32 {
    if n == Some(0) {
        return usage_error("--n must be at least 1");
    }
    let mut sizes = Vec::with_capacity(SUITES.len());
    for suite in SUITES {
        let size = n.unwrap_or_else(|| default_size(suite));
        let cap = match effective_cap(suite) {
            Ok(cap) => cap,
            Err(msg) => return usage_error(&msg),
        };
        if size > cap {
            return usage_error(&format!(
                "--n {size} exceeds the {suite} cap of {cap}; set COHA_MAX_N to raise it"
            ));
        }
        sizes.push((suite, size));
    }
    let reports: Vec<VerificationReport> = sizes
        .iter()
        .map(|&(suite, size)| run_suite(suite, size))
        .collect();
    let all_ok = reports.iter().all(|r| r.status != Status::Fail);
    match format {
        Format::Text => {
            for report in &reports {
                println!("{report}");
            }
            println!("overall: {}", if all_ok { "pass" } else { "fail" });
        }
        Format::Json => {
            let rendered: Vec<serde_json::Value> = reports.iter().map(report_json).collect();
            println!("{}", serde_json::Value::Array(rendered));
        }
    }
    i32::from(!all_ok)
}

/// Looks up an operator by its CLI name.
pub fn parse_operator(name: &str, n: usize) -> Result<GradedOperator, String> {
    const GRAMMAR: &str = "raise:i, lower:i, tlower:i, H, T:i, S:i, E:i, F:i, Hi:i";
    if name == "H" {
        return Ok(grading_h(n));
    }
    let Some((head, tail)) = name.split_once(':') else {
        return Err(format!("unknown operator {name:?}; expected one of {GRAMMAR}"));
    };
    let i: usize = tail
        .parse()
        .map_err(|_| format!("operator index {tail:?} is not a non-negative integer"))?;
    let generator_bound = |i: usize| -> Result<(), String> {
        if i < n {
            Ok(())
        } else {
            Err(format!("generator index {i} out of range for rank {n}"))
        }
    };
    let chevalley_bound = |i: usize| -> Result<(), String> {
        if i <= n {
            Ok(())
        } else {
            Err(format!("Chevalley index {i} out of range; rank {n} has indices 0..={n}"))
        }
    };
    match head {
        "raise" => Ok(raise(i as u32, n)),
        "lower" => lower(i as u32, n).map_err(|e| e.to_string()),
        "tlower" => twisted_lower(i as u32, n).map_err(|e| e.to_string()),
        "T" => {
            generator_bound(i)?;
            Ok(projected_generators(n).t.swap_remove(i))
        }
        "S" => {
            generator_bound(i)?;
            Ok(projected_generators(n).s.swap_remove(i))
        }
        "E" => {
            chevalley_bound(i)?;
            Ok(chevalley_generators(n).e.swap_remove(i))
        }
        "F" => {
            chevalley_bound(i)?;
            Ok(chevalley_generators(n).f.swap_remove(i))
        }
        "Hi" => {
            chevalley_bound(i)?;
            Ok(chevalley_generators(n).h.swap_remove(i))
        }
        _ => Err(format!("unknown operator {name:?}; expected one of {GRAMMAR}")),
    }
}

/// Parses `--state` input: either a bare comma list of generator indices
/// naming one wedge monomial, or full element text. The bare token `0` is
/// the zero element, so parsing inverts printing; the single generator
/// `phi_0` is written `+1 * [0]`.
pub fn parse_element(input: &str, n: usize) -> Result<ExteriorElement, String> {
    let trimmed = input.trim();
    if trimmed == "0" {
        return Ok(ExteriorElement::zero(Some(n)));
    }
    if trimmed.contains('[') || trimmed.contains('*') {
        parse_element_text(trimmed, n)
    } else {
        let gens = parse_index_list(trimmed, n)?;
        Ok(crate::exterior::canonicalize(&gens, Some(n)))
    }
}

/// Comma-separated generator indices; the empty string is the empty list.
fn parse_index_list(s: &str, n: usize) -> Result<Vec<u32>, String> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0usize;
    for chunk in s.split(',') {
        let value: u32 = chunk
            .trim()
            .parse()
            .map_err(|_| format!("at position {offset}: {chunk:?} is not an index"))?;
        if value as usize >= n {
            return Err(format!(
                "at position {offset}: index {value} exceeds the maximum {} for rank {n}",
                n - 1
            ));
        }
        out.push(value);
        offset += chunk.len() + 1;
    }
    Ok(out)
}

/// Element text: terms `<sign><rational> * [i1,i2,...]` joined by spaces, or
/// the single token `0`.
fn parse_element_text(s: &str, n: usize) -> Result<ExteriorElement, String> {
    let tokens: Vec<(usize, &str)> = s
        .split_whitespace()
        .map(|tok| (tok.as_ptr() as usize - s.as_ptr() as usize, tok))
        .collect();
    if tokens.len() == 1 && tokens[0].1 == "0" {
        return Ok(ExteriorElement::zero(Some(n)));
    }
    let mut out = ExteriorElement::zero(Some(n));
    let mut idx = 0;
    while idx < tokens.len() {
        let (pos, coeff_tok) = tokens[idx];
        let coeff =
            parse_rational(coeff_tok).map_err(|e| format!("at position {pos}: {e}"))?;
        let Some(&(star_pos, star)) = tokens.get(idx + 1) else {
            return Err(format!(
                "at position {}: expected '*' after the coefficient",
                pos + coeff_tok.len()
            ));
        };
        if star != "*" {
            return Err(format!("at position {star_pos}: expected '*', found {star:?}"));
        }
        let Some(&(br_pos, bracket)) = tokens.get(idx + 2) else {
            return Err(format!(
                "at position {}: expected an index list like [0,1]",
                star_pos + 1
            ));
        };
        let k = parse_bracket_list(bracket, n)
            .map_err(|e| format!("at position {br_pos}: {e}"))?;
        out.add_term(k, coeff);
        idx += 3;
    }
    Ok(out)
}

fn parse_bracket_list(tok: &str, n: usize) -> Result<WedgeIndex, String> {
    let inner = tok
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| format!("expected an index list like [0,1], found {tok:?}"))?;
    if inner.is_empty() {
        return Ok(WedgeIndex::empty());
    }
    let mut entries = Vec::new();
    for chunk in inner.split(',') {
        let value: u32 = chunk
            .parse()
            .map_err(|_| format!("{chunk:?} is not an index"))?;
        if value as usize >= n {
            return Err(format!(
                "index {value} exceeds the maximum {} for rank {n}",
                n - 1
            ));
        }
        if entries.last().is_some_and(|&last| last >= value) {
            return Err("indices must be strictly increasing".to_string());
        }
        entries.push(value);
    }
    Ok(WedgeIndex::new(entries))
}

/// Suite: the Schur polynomial of every partition in every d x (n-d) box
/// equals the signed conjugate Schur polynomial of the tail variables in the
/// rank-n coinvariant ring.
pub fn suite_transpose(n: usize) -> VerificationReport {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    let cases: Vec<(usize, Partition)> = (0..=n)
        .flat_map(|d| {
            partitions_in_box(BoxShape::new(d, n))
                .into_iter()
                .map(move |lam| (d, lam))
        })
        .collect();
    let relations_checked = cases.len();
    let counterexamples: Vec<Counterexample> = cases
        .into_par_iter()
        .filter_map(|(d, lam)| {
            let holds =
                verify_transpose_identity(n, d, &lam).expect("enumerated inside the box");
            (!holds).then(|| Counterexample {
                relation: format!("transpose d={d} {lam}"),
                witness: partition_to_index(&lam, d)
                    .expect("fits d rows")
                    .indices()
                    .to_vec(),
                lhs: format!("s{lam} in x1..x{d}"),
                rhs: format!(
                    "(-1)^{} * s{} in x{}..x{n}",
                    lam.weight(),
                    lam.transpose(),
                    d + 1
                ),
            })
        })
        .collect();
    VerificationReport::from_outcome(
        "transpose",
        params,
        relations_checked,
        counterexamples,
        started.elapsed(),
    )
}

/// Suite: `h_r` of the first d variables equals `(-1)^r e_r` of the rest in
/// the rank-n coinvariant ring, over all d and r up to n.
pub fn suite_he_duality(n: usize) -> VerificationReport {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    let cases: Vec<(usize, usize)> = (0..=n)
        .flat_map(|d| (0..=n).map(move |r| (d, r)))
        .collect();
    let relations_checked = cases.len();
    let counterexamples: Vec<Counterexample> = cases
        .into_par_iter()
        .filter_map(|(d, r)| {
            (!verify_he_duality(n, d, r)).then(|| Counterexample {
                relation: format!("h_{r}(x1..x{d})=(-1)^{r}*e_{r}(x{}..x{n})", d + 1),
                witness: vec![d as u32, r as u32],
                lhs: format!("h_{r} of the first {d} variables"),
                rhs: format!("(-1)^{r} * e_{r} of the last {} variables", n - d),
            })
        })
        .collect();
    VerificationReport::from_outcome(
        "he-duality",
        params,
        relations_checked,
        counterexamples,
        started.elapsed(),
    )
}

/// Suite: the localization pushforwards agree with the wedge operators on
/// every basis class, in both directions.
pub fn suite_equivalence(n: usize) -> VerificationReport {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    enum Case {
        Raise(u32, WedgeIndex),
        Lower(u32, WedgeIndex),
    }
    let mut cases = Vec::new();
    for k in basis(n) {
        for i in 0..n as u32 {
            if k.degree() < n {
                cases.push(Case::Raise(i, k.clone()));
            }
            if k.degree() > 0 {
                cases.push(Case::Lower(i, k.clone()));
            }
        }
    }
    let relations_checked = cases.len();
    let counterexamples: Vec<Counterexample> = cases
        .into_par_iter()
        .filter_map(|case| match case {
            Case::Raise(i, k) => {
                let d = k.degree();
                let mono = ExteriorElement::monomial(k.clone(), Some(n));
                let class = to_schur(&mono, n, d).expect("basis monomial");
                let localized = raise_localized(i, &class).expect("pushforward in range");
                let combinatorial =
                    to_schur(&raise(i, n).apply(&mono), n, d + 1).expect("wedge image");
                (localized != combinatorial).then(|| Counterexample {
                    relation: format!("raise:{i}"),
                    witness: k.indices().to_vec(),
                    lhs: localized.to_string(),
                    rhs: combinatorial.to_string(),
                })
            }
            Case::Lower(r, k) => {
                let d = k.degree();
                let mono = ExteriorElement::monomial(k.clone(), Some(n));
                let class = to_schur(&mono, n, d).expect("basis monomial");
                let localized = lower_via_transpose(r, &class).expect("degree positive");
                let combinatorial = to_schur(&d_right(n as u32 - 1 - r, &mono), n, d - 1)
                    .expect("derivative image");
                (localized != combinatorial).then(|| Counterexample {
                    relation: format!("lower:{r}"),
                    witness: k.indices().to_vec(),
                    lhs: localized.to_string(),
                    rhs: combinatorial.to_string(),
                })
            }
        })
        .collect();
    VerificationReport::from_outcome(
        "equivalence",
        params,
        relations_checked,
        counterexamples,
        started.elapsed(),
    )
}

/// Suite: shifting every index by n is the cup product with the n-th power
/// of the top class, and the rank-n truncation kills every shifted monomial
/// of positive degree.
pub fn suite_kernel(n: usize) -> VerificationReport {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    let mut relations_checked = 0usize;
    let mut counterexamples = Vec::new();
    for k in basis(n) {
        let free = ExteriorElement::monomial(k.clone(), None);
        let shifted = multiply_ed_power(&free, n as u32).expect("monomials are homogeneous");
        let expected = ExteriorElement::monomial(k.shifted(n as u32), None);
        relations_checked += 1;
        if shifted != expected {
            counterexamples.push(Counterexample {
                relation: "shift".to_string(),
                witness: k.indices().to_vec(),
                lhs: shifted.to_string(),
                rhs: expected.to_string(),
            });
        }
        if k.degree() >= 1 {
            relations_checked += 1;
            let truncated = truncate(&shifted, n);
            if !truncated.is_zero() {
                counterexamples.push(Counterexample {
                    relation: "kernel".to_string(),
                    witness: k.indices().to_vec(),
                    lhs: truncated.to_string(),
                    rhs: "0".to_string(),
                });
            }
        }
    }
    VerificationReport::from_outcome(
        "kernel",
        params,
        relations_checked,
        counterexamples,
        started.elapsed(),
    )
}
