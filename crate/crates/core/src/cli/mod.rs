//! The `qmeta` command line: `check`, `interpret`, `derive`, `measure` and
//! `goedel`.
//!
//! [`run`] takes the argument list and returns the exit code together with
//! everything written to stdout and stderr, so the binary is a thin wrapper
//! and tests can call commands in-process. Exit codes are 0 on success, 1 for
//! syntax and usage errors and 2 for semantic violations.

mod script;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

pub use script::{Body, Script, ScriptError, Statement};

use crate::decoherence::{measure, measure_statistics, RandomStream};
use crate::error::{Error, Result};
use crate::meta_calculus::{
    compose_classical, compose_quantum, decompose_classical, decompose_quantum,
};
use crate::semantics::{
    interpret_atom, interpret_superposition, round_sig12, sig12, state_records, Basis, QubitState,
};
use crate::syntax::{parse_complex, Assertion, ComplexNumber, Proposition};
use crate::truth_engine::{
    check_lines, derive_classical_defeq, derive_superposition_defeq, goedel_report, DerivationTrace,
};

#[derive(Debug, Parser)]
#[command(
    name = "qmeta",
    version,
    about = "Graded assertions, qubit semantics and truth derivations"
)]
struct Cli {
    /// Emit one JSON record per result instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Comma-separated permutation of the script basis to use instead of
    /// the declared order.
    #[arg(long, global = true, value_name = "ATOMS", value_delimiter = ',')]
    basis_order: Option<Vec<String>>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a script, validate degrees and run compose/decompose round trips.
    Check { file: PathBuf },
    /// Print the amplitude state and truth profile of each asserted state.
    Interpret { file: PathBuf },
    /// Print and verify a derivation of a definitional equation.
    Derive {
        #[command(subcommand)]
        kind: DeriveKind,
    },
    /// Sample projective measurements of each asserted state.
    Measure {
        file: PathBuf,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Report on a graded assertion of the Goedel sentence.
    Goedel {
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
    },
}

#[derive(Debug, Subcommand)]
enum DeriveKind {
    /// `|- A & B iff |- A and |- B` for two atom names.
    Classical { a: String, b: String },
    /// The superposition equation for degrees over atoms p0, p1, ...
    Quantum {
        #[arg(num_args = 2.., required = true, allow_hyphen_values = true)]
        degrees: Vec<String>,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn fail(&mut self, code: i32, message: impl std::fmt::Display) {
        self.code = self.code.max(code);
        let _ = writeln!(self.stderr, "error: {message}");
    }

    fn record(&mut self, value: Value) {
        self.stdout.push_str(&value.to_string());
        self.stdout.push('\n');
    }
}

/// Runs the command line `args`, the first item being the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 1,
                    stderr: text,
                    ..Output::default()
                }
            } else {
                Output {
                    stdout: text,
                    ..Output::default()
                }
            };
        }
    };
    let mut out = Output::default();
    let order = cli.basis_order.as_deref();
    match &cli.command {
        Command::Check { file } => check(&mut out, file, order, cli.json),
        Command::Interpret { file } => interpret(&mut out, file, order, cli.json),
        Command::Derive { kind } => derive(&mut out, kind, cli.json),
        Command::Measure { file, trials, seed } => {
            measure_cmd(&mut out, file, order, *trials, *seed, cli.json)
        }
        Command::Goedel { degree } => goedel(&mut out, degree, cli.json),
    }
    out
}

/// A script statement after checking.
struct Evaluated<'s> {
    statement: &'s Statement,
    assertion: Option<Assertion>,
    result: Result<Option<QubitState>>,
}

fn load(out: &mut Output, file: &Path, order: Option<&[String]>) -> Option<(Script, Basis)> {
    let source = match std::fs::read_to_string(file) {
        Ok(s) => s,
        Err(e) => {
            out.fail(1, format_args!("{}: {e}", file.display()));
            return None;
        }
    };
    let script = match Script::parse(&source) {
        Ok(s) => s,
        Err(e) => {
            out.fail(e.error.exit_code(), e);
            return None;
        }
    };
    let basis = match order {
        None => script.basis.clone(),
        Some(order) => match reorder(&script.basis, order) {
            Ok(b) => b,
            Err(e) => {
                out.fail(e.exit_code(), e);
                return None;
            }
        },
    };
    Some((script, basis))
}

fn reorder(basis: &Basis, order: &[String]) -> Result<Basis> {
    let mut sorted: Vec<&String> = order.iter().collect();
    let mut declared: Vec<&String> = basis.atoms().iter().collect();
    sorted.sort();
    declared.sort();
    if sorted != declared {
        return Err(Error::Usage(format!(
            "--basis-order must be a permutation of the declared basis {}",
            basis.atoms().join(" ")
        )));
    }
    Basis::new(order.iter().cloned())
}

fn evaluate<'s>(script: &'s Script, basis: &Basis) -> Vec<Evaluated<'s>> {
    let mut done: Vec<Evaluated<'s>> = Vec::with_capacity(script.statements.len());
    for statement in &script.statements {
        let assertion = match &statement.body {
            Body::Assert(a) => Ok(a.clone()),
            Body::Compose(refs) => compose_refs(&done, refs),
        };
        let evaluated = match assertion {
            Ok(a) => Evaluated {
                statement,
                result: check_assertion(&a, basis),
                assertion: Some(a),
            },
            Err(e) => Evaluated {
                statement,
                assertion: None,
                result: Err(e),
            },
        };
        done.push(evaluated);
    }
    done
}

fn compose_refs(done: &[Evaluated<'_>], refs: &[usize]) -> Result<Assertion> {
    let parts = refs
        .iter()
        .map(|&i| {
            done[i]
                .assertion
                .clone()
                .ok_or_else(|| Error::FailedDependency(done[i].statement.label.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    if parts.len() == 2 && parts.iter().all(Assertion::is_classical) {
        let composed = compose_classical(&parts[0], &parts[1])?;
        let (a, b) = decompose_classical(&composed)?;
        if !(a.bit_eq(&parts[0]) && b.bit_eq(&parts[1])) {
            return Err(Error::RoundTrip(composed.to_string()));
        }
        Ok(composed)
    } else {
        let composed = compose_quantum(&parts)?;
        let back = decompose_quantum(&composed)?;
        if back.len() != parts.len() || !back.iter().zip(&parts).all(|(x, y)| x.bit_eq(y)) {
            return Err(Error::RoundTrip(composed.to_string()));
        }
        Ok(composed)
    }
}

/// Validates `a` against the basis and returns the state it asserts, if any:
/// a classical assertion of an atom or of a superposition.
fn check_assertion(a: &Assertion, basis: &Basis) -> Result<Option<QubitState>> {
    if let Some(unknown) = a
        .subject()
        .atoms()
        .into_iter()
        .find(|x| basis.index_of(x).is_none())
    {
        return Err(Error::UnknownAtom(unknown.to_string()));
    }
    match a.subject() {
        Proposition::QuantumSuperposition(_) => {
            let recomposed = compose_quantum(&decompose_quantum(a)?)?;
            if !recomposed.bit_eq(&Assertion::classical(a.subject().clone())) {
                return Err(Error::RoundTrip(a.to_string()));
            }
            if a.is_classical() {
                interpret_superposition(a.subject(), basis).map(Some)
            } else {
                Ok(None)
            }
        }
        Proposition::ClassicalAnd(..) if a.is_classical() => {
            let (l, r) = decompose_classical(a)?;
            if !compose_classical(&l, &r)?.bit_eq(a) {
                return Err(Error::RoundTrip(a.to_string()));
            }
            Ok(None)
        }
        Proposition::Atom(name) if a.is_classical() => interpret_atom(name, basis).map(Some),
        _ => Ok(None),
    }
}

/// Reports failed statements; returns false if there were any.
fn report_failures(out: &mut Output, evaluated: &[Evaluated<'_>]) -> bool {
    let mut ok = true;
    for e in evaluated {
        if let Err(err) = &e.result {
            let code = err.exit_code();
            // a syntax-class failure outranks semantic ones
            out.code = if ok { code } else { out.code.min(code) };
            ok = false;
            let _ = writeln!(
                out.stderr,
                "error: line {} ({}): {err}",
                e.statement.line, e.statement.label
            );
        }
    }
    ok
}

fn shown(e: &Evaluated<'_>) -> String {
    e.assertion
        .as_ref()
        .map_or_else(|| e.statement.text.clone(), ToString::to_string)
}

fn check(out: &mut Output, file: &Path, order: Option<&[String]>, json: bool) {
    let Some((script, basis)) = load(out, file, order) else {
        return;
    };
    let evaluated = evaluate(&script, &basis);
    for e in &evaluated {
        let label = &e.statement.label;
        if json {
            out.record(json!({
                "label": label,
                "line": e.statement.line,
                "assertion": e.assertion.as_ref().map(ToString::to_string),
                "ok": e.result.is_ok(),
                "error": e.result.as_ref().err().map(ToString::to_string),
            }));
        } else {
            let _ = match &e.result {
                Ok(_) => writeln!(out.stdout, "ok    {label}: {}", shown(e)),
                Err(err) => writeln!(out.stdout, "FAIL  {label}: {}: {err}", shown(e)),
            };
        }
    }
    let passed = evaluated.iter().filter(|e| e.result.is_ok()).count();
    if !json {
        let _ = writeln!(
            out.stdout,
            "{passed} of {} statements passed",
            evaluated.len()
        );
    }
    report_failures(out, &evaluated);
}

/// Loads, evaluates and returns the asserted states, or reports why not.
fn states(
    out: &mut Output,
    file: &Path,
    order: Option<&[String]>,
) -> Vec<(String, String, QubitState)> {
    let Some((script, basis)) = load(out, file, order) else {
        return Vec::new();
    };
    let evaluated = evaluate(&script, &basis);
    if !report_failures(out, &evaluated) {
        return Vec::new();
    }
    let states: Vec<_> = evaluated
        .iter()
        .filter_map(|e| {
            let state = e.result.as_ref().ok()?.clone()?;
            Some((e.statement.label.clone(), shown(e), state))
        })
        .collect();
    if states.is_empty() {
        out.fail(
            1,
            "script asserts no state: assert an atom or a superposition with `|-`",
        );
    }
    states
}

fn interpret(out: &mut Output, file: &Path, order: Option<&[String]>, json: bool) {
    for (i, (label, assertion, state)) in states(out, file, order).iter().enumerate() {
        let records = state_records(state);
        if json {
            let rows: Vec<Value> = records
                .iter()
                .map(|r| json!({ "atom": r.atom, "re": r.re, "im": r.im, "truth": round_sig12(r.truth) }))
                .collect();
            out.record(json!({ "label": label, "assertion": assertion, "state": rows }));
            continue;
        }
        if i > 0 {
            out.stdout.push('\n');
        }
        let _ = writeln!(out.stdout, "state {label}: {assertion}");
        let _ = writeln!(out.stdout, "atom\tamplitude\ttruth");
        for (r, amp) in records.iter().zip(state.amplitudes()) {
            let _ = writeln!(out.stdout, "{}\t{amp}\t{}", r.atom, sig12(r.truth));
        }
    }
}

fn measure_cmd(
    out: &mut Output,
    file: &Path,
    order: Option<&[String]>,
    trials: u64,
    seed: u64,
    json: bool,
) {
    if trials == 0 {
        out.fail(1, "--trials must be at least 1");
        return;
    }
    for (i, (label, assertion, state)) in states(out, file, order).iter().enumerate() {
        let stats = match measure_statistics(state, trials, seed) {
            Ok(s) => s,
            Err(e) => {
                out.fail(e.exit_code(), e);
                return;
            }
        };
        let single = (trials == 1).then(|| measure(state, &mut RandomStream::new(seed)));
        if json {
            let mut record = json!({
                "label": label,
                "assertion": assertion,
                "seed": seed,
                "trials": trials,
                "records": stats.records(),
            });
            if let Some(o) = &single {
                record["outcome"] = json!({
                    "atom": o.atom,
                    "assertion": o.collapsed.to_string(),
                    "probability": round_sig12(o.probability.value()),
                });
            }
            out.record(record);
            continue;
        }
        if i > 0 {
            out.stdout.push('\n');
        }
        let _ = writeln!(out.stdout, "state {label}: {assertion}");
        out.stdout.push_str(&stats.to_string());
        if let Some(o) = &single {
            let _ = writeln!(
                out.stdout,
                "outcome: {} with probability {}",
                o.collapsed,
                sig12(o.probability.value())
            );
        }
    }
}

fn degree_arg(text: &str) -> Result<ComplexNumber> {
    parse_complex(text)
}

fn derive(out: &mut Output, kind: &DeriveKind, json: bool) {
    let (name, trace) = match kind {
        DeriveKind::Classical { a, b } => ("classical", derive_classical_defeq(a, b)),
        DeriveKind::Quantum { degrees } => {
            let parsed = degrees
                .iter()
                .map(|d| degree_arg(d).map_err(|e| Error::Usage(format!("degree `{d}`: {e}"))))
                .collect::<Result<Vec<_>>>();
            let trace = parsed.and_then(|ds| {
                let names: Vec<String> = (0..ds.len()).map(|i| format!("p{i}")).collect();
                let parts: Vec<_> = ds
                    .into_iter()
                    .zip(names.iter().map(String::as_str))
                    .collect();
                derive_superposition_defeq(&parts)
            });
            ("quantum", trace)
        }
    };
    let trace = match trace {
        Ok(t) => t,
        Err(e) => return out.fail(e.exit_code(), e),
    };
    let verdicts = check_lines(&trace);
    let verified = verdicts.iter().all(Result::is_ok);
    if json {
        out.record(trace_record(name, &trace, verified));
    } else {
        out.stdout.push_str(&trace.to_string());
    }
    for err in verdicts.into_iter().filter_map(Result::err) {
        out.fail(2, err);
    }
}

fn trace_record(kind: &str, trace: &DerivationTrace, verified: bool) -> Value {
    let lines: Vec<Value> = trace
        .lines()
        .iter()
        .enumerate()
        .map(|(i, l)| {
            json!({
                "n": i + 1,
                "judgment": l.judgment,
                "rule": l.rule.tag(),
                "from": l.refs.iter().map(|r| r + 1).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "kind": kind,
        "conclusion": trace.conclusion(),
        "verified": verified,
        "lines": lines,
    })
}

fn goedel(out: &mut Output, degree: &str, json: bool) {
    let report = degree_arg(degree)
        .map_err(|e| Error::Usage(format!("degree `{degree}`: {e}")))
        .and_then(goedel_report);
    match report {
        Ok(r) if json => out.record(serde_json::to_value(r.record()).expect("record serializes")),
        Ok(r) => out.stdout.push_str(&r.to_string()),
        Err(e) => out.fail(e.exit_code(), e),
    }
}
