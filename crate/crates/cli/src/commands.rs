use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use iasi_core::graph::parse_edge_list;
use iasi_core::{
    admits_uniform, admits_weakly_uniform, construct, enumerate_all, params_for_k, search, verify,
    Certificate, ConstructError, ConstructionMode, Decision, Graph, Labeling, SearchError,
    SearchMode, SearchOutcome, SearchSpace, UniformParams, VerificationReport,
};
use serde_json::{json, Value};

use crate::args::{
    ConstructArgs, ConstructMode, DecideArgs, Format, GraphSource, SearchArgs, SearchModeArg,
    VerifyArgs,
};
use crate::family::parse_family;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Negative = 1,
    InputError = 2,
    BudgetError = 3,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Io(io::Error),
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(message) => f.write_str(message),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError::Io(err)
    }
}

fn input(message: impl Into<String>) -> CliError {
    CliError::Input(message.into())
}

/// Writes either plain text lines or one JSON object per line.
pub struct Emitter<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

impl<'a> Emitter<'a> {
    pub fn new(format: Format, out: &'a mut dyn Write) -> Self {
        Self { format, out }
    }

    fn emit(&mut self, text: impl Display, record: impl FnOnce() -> Value) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{text}"),
            Format::JsonLines => writeln!(self.out, "{}", record()),
        }
    }

    fn labeling(&mut self, labeling: &Labeling) -> io::Result<()> {
        for (v, label) in labeling.labels().iter().enumerate() {
            self.emit(
                format_args!("{v}: {label}"),
                || json!({"record": "label", "vertex": v, "label": label}),
            )?;
        }
        Ok(())
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_graph(source: &GraphSource) -> Result<Graph, CliError> {
    match (&source.graph, &source.family) {
        (Some(path), _) => parse_edge_list(&read_file(path)?)
            .map_err(|e| input(format!("{}: {e}", path.display()))),
        (None, Some(spec)) => parse_family(spec).map_err(input),
        (None, None) => Err(input("a graph is required (--graph or --family)")),
    }
}

fn optional(value: Option<usize>) -> String {
    value.map_or_else(|| "none".to_string(), |k| k.to_string())
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut Emitter) -> Result<Status, CliError> {
    let graph = load_graph(&args.source)?;
    let labeling = Labeling::parse(&read_file(&args.labeling)?)
        .map_err(|e| input(format!("{}: {e}", args.labeling.display())))?;
    labeling
        .check_fits(&graph)
        .map_err(|e| input(e.to_string()))?;
    let report = verify(&graph, &labeling);
    write_report(&report, out)?;

    let mut expectations = Vec::new();
    if let Some(k) = args.expect_uniform {
        expectations.push(("uniform", k, report.is_uniform(k)));
    }
    if let Some(k) = args.expect_weakly {
        expectations.push(("weakly", k, report.is_weakly_uniform(k)));
    }
    for &(kind, k, passed) in &expectations {
        let verdict = if passed { "pass" } else { "fail" };
        out.emit(
            format_args!("expect {kind} {k}: {verdict}"),
            || json!({"record": "expectation", "kind": kind, "k": k, "passed": passed}),
        )?;
    }
    let ok = if expectations.is_empty() {
        report.is_iasi
    } else {
        expectations.iter().all(|e| e.2)
    };
    Ok(if ok {
        Status::Success
    } else {
        Status::Negative
    })
}

fn write_report(report: &VerificationReport, out: &mut Emitter) -> io::Result<()> {
    let text = format!(
        "vertex_injective: {}\nedge_injective: {}\nis_iasi: {}\nuniform_k: {}\nis_weak: {}\nweakly_uniform_k: {}",
        report.vertex_injective,
        report.edge_injective,
        report.is_iasi,
        optional(report.uniform_k),
        report.is_weak,
        optional(report.weakly_uniform_k),
    );
    out.emit(text, || {
        json!({
            "record": "summary",
            "vertex_injective": report.vertex_injective,
            "edge_injective": report.edge_injective,
            "is_iasi": report.is_iasi,
            "uniform_k": report.uniform_k,
            "is_weak": report.is_weak,
            "weakly_uniform_k": report.weakly_uniform_k,
        })
    })?;
    for e in &report.edges {
        out.emit(
            format_args!("edge {}-{}: {} size {}", e.u, e.v, e.label, e.size),
            || json!({"record": "edge", "u": e.u, "v": e.v, "label": e.label, "size": e.size}),
        )?;
    }
    for w in &report.witnesses {
        out.emit(format_args!("witness: {w}"), || {
            let mut record = serde_json::to_value(w).expect("witnesses serialize");
            record["record"] = json!("witness");
            record
        })?;
    }
    if report.witnesses_truncated {
        out.emit(
            "witnesses truncated",
            || json!({"record": "witnesses_truncated"}),
        )?;
    }
    Ok(())
}

fn resolve_params(args: &ConstructArgs) -> Result<(ConstructionMode, UniformParams), CliError> {
    let param_error = |e: ConstructError| input(e.to_string());
    let d = args.d.unwrap_or(1);
    if d == 0 {
        return Err(input("--d must be at least 1"));
    }
    let positive = |name: &str, v: Option<usize>| match v {
        Some(0) => Err(input(format!("--{name} must be at least 1"))),
        other => Ok(other),
    };
    let (k, m, n) = (
        positive("k", args.k)?,
        positive("m", args.m)?,
        positive("n", args.n)?,
    );
    match args.mode {
        ConstructMode::Weakly => {
            if m.is_some() || n.is_some() || args.d.is_some() {
                return Err(input("weakly mode takes only --k"));
            }
            let k = k.ok_or_else(|| input("weakly mode needs --k"))?;
            Ok((
                ConstructionMode::Weakly,
                params_for_k(k, ConstructionMode::Weakly).map_err(param_error)?,
            ))
        }
        ConstructMode::Bipartite => {
            let (m, n) = match (k, m, n) {
                (_, Some(m), Some(n)) => (m, n),
                (Some(k), Some(m), None) if m <= k => (m, k - m + 1),
                (Some(k), None, Some(n)) if n <= k => (k - n + 1, n),
                (Some(k), None, None) => {
                    let p = params_for_k(k, ConstructionMode::Bipartite).map_err(param_error)?;
                    (p.m, p.n)
                }
                (None, _, _) => return Err(input("bipartite mode needs --k or both --m and --n")),
                _ => return Err(input("--m/--n exceed --k")),
            };
            if k.is_some_and(|k| k != m + n - 1) {
                return Err(input(format!("--k must equal m + n - 1 = {}", m + n - 1)));
            }
            Ok((
                ConstructionMode::Bipartite,
                UniformParams {
                    k: m + n - 1,
                    m,
                    n,
                    d,
                },
            ))
        }
        ConstructMode::Odd => {
            if n.is_some() {
                return Err(input("odd mode takes --m, not --n"));
            }
            let m = match (k, m) {
                (_, Some(m)) => m,
                (Some(k), None) => {
                    params_for_k(k, ConstructionMode::Odd)
                        .map_err(param_error)?
                        .m
                }
                (None, None) => return Err(input("odd mode needs --k or --m")),
            };
            if k.is_some_and(|k| k != 2 * m - 1) {
                return Err(input(format!("--k must equal 2m - 1 = {}", 2 * m - 1)));
            }
            Ok((
                ConstructionMode::Odd,
                UniformParams {
                    k: 2 * m - 1,
                    m,
                    n: m,
                    d,
                },
            ))
        }
    }
}

pub fn cmd_construct(args: &ConstructArgs, out: &mut Emitter) -> Result<Status, CliError> {
    let graph = load_graph(&args.source)?;
    let (mode, params) = resolve_params(args)?;
    let labeling = match construct(&graph, mode, params) {
        Ok(l) => l,
        Err(ConstructError::NotBipartite(cycle)) => {
            out.emit(
                format_args!("infeasible: graph is not bipartite; odd cycle {cycle}"),
                || json!({"record": "infeasible", "reason": "not_bipartite", "odd_cycle": cycle}),
            )?;
            return Ok(Status::Negative);
        }
        Err(e) => return Err(input(e.to_string())),
    };

    let report = verify(&graph, &labeling);
    let confirmed = match mode {
        ConstructionMode::Weakly => report.is_weakly_uniform(params.k),
        _ => report.is_uniform(params.k),
    };
    if !confirmed {
        out.emit(
            "self-check failed: constructed labeling does not verify",
            || json!({"record": "self_check_failed"}),
        )?;
        return Ok(Status::Negative);
    }
    out.labeling(&labeling)?;
    Ok(Status::Success)
}

pub fn cmd_decide(args: &DecideArgs, out: &mut Emitter) -> Result<Status, CliError> {
    if args.k == 0 {
        return Err(input("--k must be at least 1"));
    }
    let graph = load_graph(&args.source)?;
    let decision: Decision = if args.weakly {
        admits_weakly_uniform(&graph, args.k)
    } else {
        admits_uniform(&graph, args.k)
    };
    let certificate = decision
        .certificate
        .as_ref()
        .map_or_else(|| "none".to_string(), Certificate::to_string);
    out.emit(
        format_args!(
            "exists: {}\nrule: {}\ncertificate: {certificate}",
            decision.exists, decision.rule
        ),
        || {
            let mut record = serde_json::to_value(&decision).expect("decisions serialize");
            record["record"] = json!("decision");
            record
        },
    )?;
    Ok(if decision.exists {
        Status::Success
    } else {
        Status::Negative
    })
}

pub fn cmd_search(args: &SearchArgs, out: &mut Emitter) -> Result<Status, CliError> {
    let graph = load_graph(&args.source)?;
    let space = SearchSpace {
        universe_max: args.universe,
        max_label_size: args.max_size,
        mode: match args.mode {
            SearchModeArg::Uniform => SearchMode::Uniform,
            SearchModeArg::Weakly => SearchMode::Weakly,
        },
        k: args.k,
        budget: args.budget,
    };
    let found = match args.all {
        Some(limit) => enumerate_all(&graph, &space, limit),
        None => search(&graph, &space).map(|outcome| match outcome {
            SearchOutcome::Found(l) => vec![l],
            SearchOutcome::Exhausted => Vec::new(),
        }),
    };
    match found {
        Ok(labelings) if labelings.is_empty() => {
            out.emit("exhausted", || json!({"record": "exhausted"}))?;
            Ok(Status::Negative)
        }
        Ok(labelings) => {
            let numbered = args.all.is_some();
            for (i, l) in labelings.iter().enumerate() {
                if numbered {
                    out.emit(
                        format_args!("# labeling {}", i + 1),
                        || json!({"record": "labeling", "index": i + 1}),
                    )?;
                }
                out.labeling(l)?;
            }
            Ok(Status::Success)
        }
        Err(SearchError::BudgetExceeded { budget }) => {
            out.emit(
                format_args!("aborted: budget of {budget} steps exhausted"),
                || json!({"record": "aborted", "budget": budget}),
            )?;
            Ok(Status::BudgetError)
        }
        Err(e @ SearchError::InvalidSpace(_)) => Err(input(e.to_string())),
    }
}
