//! The `nnseq` command line.
//!
//! [`run`] parses arguments, dispatches to the library and returns the exit
//! code with captured output, so the binary is a thin wrapper and tests can
//! drive every subcommand in-process.
//!
//! Exit codes: 0 success, 1 checked-and-false or empty result, 2 usage or
//! input error (including anything that could not be checked).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{self, Existence, StatusKind};
use crate::codec::{encode_quadruple, format_record, parse_record};
use crate::construct::{bs_to_ts, golay_search, golay_to_ns, hadamard_from_od, is_golay_number, ts_to_od, verify_od};
use crate::search::{
    self, enumerate_cases, Checkpoint, Prunes, ReportMode, SearchError, SearchKind, SearchOutcome, SearchSpec,
};
use crate::seqcore::{verify_quadruple, QuadKind, SeqQuadruple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "nnseq", version, about = "Near-normal, normal and T-sequences")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Bs,
    Ns,
    Nn,
    Ts,
}

impl KindArg {
    fn quad(self) -> QuadKind {
        match self {
            KindArg::Bs => QuadKind::Bs,
            KindArg::Ns => QuadKind::Ns,
            KindArg::Nn => QuadKind::Nn,
            KindArg::Ts => QuadKind::Ts,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SearchKindArg {
    Nn,
    Ns,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Count,
    All,
    First,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a quadruple against the definition of its kind.
    Verify(InputArgs),
    /// Print a record with plaintext sequences.
    Decode(InputArgs),
    /// Print a record in digit-code form.
    Encode(InputArgs),
    /// Exhaustive search for NN or NS quadruples.
    Search(SearchArgs),
    /// Build T-sequences, orthogonal designs, Hadamard matrices, Golay pairs.
    Construct {
        #[command(subcommand)]
        target: ConstructCmd,
    },
    /// Published witnesses and existence status.
    Catalog {
        #[command(subcommand)]
        query: CatalogCmd,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Kind of a plaintext quadruple, or the expected kind of a record.
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Record line, `KIND n AB CD` or `KIND n A;B;C;D`.
    #[arg(long, conflicts_with = "quad")]
    record: Option<String>,
    /// Plaintext quadruple `A;B;C;D` (needs --kind).
    quad: Option<String>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, value_enum)]
    kind: SearchKindArg,
    #[arg(long)]
    order: usize,
    /// Comma-separated case ids in 1..=12.
    #[arg(long, value_delimiter = ',')]
    cases: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = ModeArg::All)]
    mode: ModeArg,
    /// One canonical representative per equivalence class.
    #[arg(long)]
    classes: bool,
    /// Write a checkpoint here every --checkpoint-every nodes.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long, default_value_t = 5_000_000, requires = "checkpoint")]
    checkpoint_every: u64,
    /// Continue from a checkpoint file.
    #[arg(long)]
    resume: Option<PathBuf>,
    /// 0 uses one worker per core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Stop after this many nodes (counted across resumes).
    #[arg(long)]
    max_nodes: Option<u64>,
    #[arg(long)]
    max_seconds: Option<u64>,
    /// Allow orders above the default bound.
    #[arg(long)]
    allow_large: bool,
    #[arg(long)]
    no_sos_prune: bool,
    #[arg(long)]
    no_lag_prune: bool,
    /// Print the 12 case descriptors and exit.
    #[arg(long)]
    list_cases: bool,
}

#[derive(Args, Debug)]
struct SourceArgs {
    /// Record line of the input quadruple.
    #[arg(long)]
    from_record: String,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    /// Base sequences to T-sequences.
    Ts(SourceArgs),
    /// T-sequences (or base sequences) to an orthogonal design.
    Od(SourceArgs),
    /// Full pipeline to a Hadamard matrix.
    Hadamard {
        #[command(flatten)]
        source: SourceArgs,
        /// Values substituted for the four variables.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,1,1,1")]
        values: Vec<i64>,
    },
    /// All Golay pairs of a length, optionally as NS records.
    Golay {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        ns: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// Existence status of NS(n), NN(n) or BS(n+1,n).
    Status {
        #[arg(long, value_parser = parse_status_kind)]
        kind: StatusKind,
        #[arg(long)]
        order: usize,
    },
    /// Whether odd n is a Yang number, or all odd n up to --up-to.
    Yang {
        n: Option<u64>,
        #[arg(long, conflicts_with = "n")]
        up_to: Option<u64>,
    },
    /// The embedded NN witnesses.
    Table1,
    /// Whether n has the form 2^a 10^b 26^c.
    Golay { n: u64 },
    /// Load and re-verify an archive file.
    Check { path: PathBuf },
    /// Write the embedded witnesses to an archive file.
    Save { path: PathBuf },
}

fn parse_status_kind(s: &str) -> Result<StatusKind, String> {
    match s.to_ascii_lowercase().as_str() {
        "ns" => Ok(StatusKind::Ns),
        "nn" => Ok(StatusKind::Nn),
        "bs" => Ok(StatusKind::BaseShifted),
        _ => Err(format!("unknown kind {s:?} (expected ns, nn or bs)")),
    }
}

/// Runs one invocation. `args` excludes the program name.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("nnseq")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput::ok(EXIT_OK, text)
            };
        }
    };
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Verify(a) => verify(a, json),
        Command::Decode(a) => decode(a, json),
        Command::Encode(a) => encode(a, json),
        Command::Search(a) => run_search(a, json),
        Command::Construct { target } => construct(target, json),
        Command::Catalog { query } => catalog_cmd(query, json),
    }
}

fn json_out(code: i32, v: Value) -> CliOutput {
    CliOutput::ok(code, format!("{}\n", serde_json::to_string_pretty(&v).expect("json")))
}

fn read_input(a: &InputArgs) -> Result<SeqQuadruple, String> {
    match (&a.record, &a.quad) {
        (Some(line), _) => {
            let q = parse_record(line).map_err(|e| e.to_string())?;
            match a.kind {
                Some(k) if k.quad() != q.kind() => {
                    Err(format!("--kind {} does not match record kind {}", k.quad(), q.kind()))
                }
                _ => Ok(q),
            }
        }
        (None, Some(text)) => {
            let kind = a.kind.ok_or("a plaintext quadruple needs --kind")?;
            SeqQuadruple::parse(kind.quad(), text).map_err(|e| e.to_string())
        }
        (None, None) => Err("give --record LINE or a plaintext quadruple".into()),
    }
}

fn verify(a: InputArgs, json: bool) -> CliOutput {
    let q = match read_input(&a) {
        Ok(q) => q,
        Err(e) => return CliOutput::usage(e),
    };
    let report = match verify_quadruple(&q) {
        Ok(r) => r,
        Err(e) => return CliOutput::usage(e),
    };
    let code = if report.passed() { EXIT_OK } else { EXIT_FALSE };
    let (m, n) = q.shape();
    if json {
        return json_out(
            code,
            json!({
                "kind": q.kind().tag(),
                "shape": [m, n],
                "sums": [q.sums().a, q.sums().b, q.sums().c, q.sums().d],
                "pass": report.passed(),
                "failure": report.failure,
            }),
        );
    }
    CliOutput::ok(code, format!("{report}\nsums {}\n", q.sums()))
}

fn decode(a: InputArgs, json: bool) -> CliOutput {
    let q = match read_input(&a) {
        Ok(q) => q,
        Err(e) => return CliOutput::usage(e),
    };
    let n = q.shape().1;
    if json {
        return json_out(
            EXIT_OK,
            json!({
                "kind": q.kind().tag(),
                "order": n,
                "a": crate::seqcore::to_plaintext(q.a()),
                "b": crate::seqcore::to_plaintext(q.b()),
                "c": crate::seqcore::to_plaintext(q.c()),
                "d": crate::seqcore::to_plaintext(q.d()),
            }),
        );
    }
    CliOutput::ok(EXIT_OK, format!("{} {n} {}\n", q.kind(), q.plaintext()))
}

fn encode(a: InputArgs, json: bool) -> CliOutput {
    let q = match read_input(&a) {
        Ok(q) => q,
        Err(e) => return CliOutput::usage(e),
    };
    if q.shape().1 == 0 || !q.kind().is_binary() {
        return CliOutput::usage("digit codes need a binary quadruple of order at least 1");
    }
    let (ab, cd) = match encode_quadruple(&q) {
        Ok(c) => c,
        Err(e) => return CliOutput::usage(e),
    };
    if json {
        return json_out(
            EXIT_OK,
            json!({"kind": q.kind().tag(), "order": q.shape().1, "ab": ab.digits, "cd": cd.digits}),
        );
    }
    CliOutput::ok(EXIT_OK, format!("{}\n", format_record(&q)))
}

fn search_kind(k: SearchKindArg) -> SearchKind {
    match k {
        SearchKindArg::Nn => SearchKind::Nn,
        SearchKindArg::Ns => SearchKind::Ns,
    }
}

fn run_search(a: SearchArgs, json: bool) -> CliOutput {
    let kind = search_kind(a.kind);
    if a.list_cases {
        let cases = enumerate_cases(a.order);
        if json {
            let v: Vec<Value> = cases
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "rule": c.rule,
                        "keys": c.keys.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            return json_out(EXIT_OK, Value::Array(v));
        }
        let mut out = String::new();
        for c in &cases {
            let _ = writeln!(out, "{c}");
        }
        return CliOutput::ok(EXIT_OK, out);
    }

    let mut spec = SearchSpec::new(kind, a.order)
        .mode(match a.mode {
            ModeArg::Count => ReportMode::Count,
            ModeArg::All => ReportMode::All,
            ModeArg::First => ReportMode::First,
        })
        .classes(a.classes)
        .workers(a.workers)
        .prunes(Prunes {
            sum_of_squares: !a.no_sos_prune,
            partial_lag: !a.no_lag_prune,
        });
    spec.allow_large = a.allow_large;
    spec.limits.max_time = a.max_seconds.map(Duration::from_secs);
    if let Some(ids) = a.cases.clone() {
        spec = spec.cases(ids);
    }
    if let Some(path) = &a.resume {
        match Checkpoint::load(path) {
            Ok(cp) => spec = spec.resume(cp),
            Err(e) => return CliOutput::usage(e),
        }
    }

    let result = match &a.checkpoint {
        None => {
            spec.limits.max_nodes = a.max_nodes;
            search::search(&spec)
        }
        Some(path) => chunked_search(spec, path, a.checkpoint_every.max(1), a.max_nodes),
    };

    match result {
        Ok(outcome) => {
            let code = if outcome.count == 0 { EXIT_FALSE } else { EXIT_OK };
            CliOutput::ok(code, render_outcome(&outcome, a.mode, json, None))
        }
        Err(SearchError::Budget { partial, checkpoint }) => {
            let mut stderr = String::from("budget exhausted; search incomplete");
            if let Some(path) = &a.checkpoint {
                let _ = write!(stderr, "; resume with --resume {}", path.display());
                if let Err(e) = checkpoint.save(path) {
                    let _ = write!(stderr, " (saving failed: {e})");
                }
            }
            stderr.push('\n');
            CliOutput {
                code: EXIT_USAGE,
                stdout: render_outcome(&partial, a.mode, json, Some(&checkpoint)),
                stderr,
            }
        }
        Err(e) => CliOutput::usage(e),
    }
}

/// Runs the search in slices of `every` nodes, saving a checkpoint after each.
fn chunked_search(
    mut spec: SearchSpec,
    path: &std::path::Path,
    every: u64,
    total: Option<u64>,
) -> Result<SearchOutcome, SearchError> {
    loop {
        let done = spec.resume.as_ref().map_or(0, |cp| cp.stats.nodes);
        let mut slice = done + every;
        if let Some(t) = total {
            slice = slice.min(t.max(done + 1));
        }
        spec.limits.max_nodes = Some(slice);
        match search::search(&spec) {
            Err(SearchError::Budget { partial, checkpoint }) => {
                if total.is_some_and(|t| checkpoint.stats.nodes >= t) {
                    return Err(SearchError::Budget { partial, checkpoint });
                }
                checkpoint.save(path)?;
                spec.resume = Some(*checkpoint);
            }
            Ok(outcome) => {
                if path.exists() {
                    std::fs::remove_file(path)?;
                }
                return Ok(outcome);
            }
            Err(e) => return Err(e),
        }
    }
}

fn render_outcome(o: &SearchOutcome, mode: ModeArg, json: bool, cp: Option<&Checkpoint>) -> String {
    let list = !matches!(mode, ModeArg::Count) || o.solutions.len() as u64 == o.count && o.count > 0;
    if json {
        let mut v = json!({
            "kind": o.kind.tag(),
            "order": o.order,
            "count": o.count,
            "complete": cp.is_none(),
            "stats": {
                "nodes": o.stats.nodes,
                "prunes": o.stats.prunes,
                "leaves": o.stats.leaves,
                "lookups": o.stats.lookups,
            },
            "note": o.note,
        });
        if list {
            v["solutions"] = o.solutions.iter().map(format_record).collect::<Vec<_>>().into();
        }
        return format!("{}\n", serde_json::to_string_pretty(&v).expect("json"));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}({}) count {}", o.kind, o.order, o.count);
    if let Some(note) = &o.note {
        let _ = writeln!(out, "note: {note}");
    }
    if list {
        for q in &o.solutions {
            let _ = writeln!(out, "{}", format_record(q));
        }
    }
    let _ = writeln!(
        out,
        "nodes {} prunes {} leaves {} lookups {}",
        o.stats.nodes, o.stats.prunes, o.stats.leaves, o.stats.lookups
    );
    out
}

fn write_or_inline(out: &Option<PathBuf>, body: &str, stdout: &mut String) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            stdout.push_str(body);
            Ok(())
        }
    }
}

fn source_ts(line: &str) -> Result<SeqQuadruple, String> {
    let q = parse_record(line).map_err(|e| e.to_string())?;
    if q.kind() == QuadKind::Ts {
        return Ok(q);
    }
    bs_to_ts(&q).map_err(|e| e.to_string())
}

fn construct(cmd: ConstructCmd, json: bool) -> CliOutput {
    match cmd {
        ConstructCmd::Ts(src) => {
            let q = match parse_record(&src.from_record) {
                Ok(q) => q,
                Err(e) => return CliOutput::usage(e),
            };
            let ts = match bs_to_ts(&q) {
                Ok(t) => t,
                Err(e) => return CliOutput::usage(e),
            };
            let record = format!("{}\n", format_record(&ts));
            let mut stdout = String::new();
            if let Err(e) = write_or_inline(&src.out, &record, &mut stdout) {
                return CliOutput::usage(e);
            }
            let _ = writeln!(stdout, "TS({}): pass", ts.shape().1);
            if json {
                return json_out(
                    EXIT_OK,
                    json!({"length": ts.shape().1, "record": format_record(&ts), "pass": true}),
                );
            }
            CliOutput::ok(EXIT_OK, stdout)
        }
        ConstructCmd::Od(src) => {
            let ts = match source_ts(&src.from_record) {
                Ok(t) => t,
                Err(e) => return CliOutput::usage(e),
            };
            let od = match ts_to_od(&ts) {
                Ok(m) => m,
                Err(e) => return CliOutput::usage(e),
            };
            let report = verify_od(&od);
            let code = if report.passed() { EXIT_OK } else { EXIT_FALSE };
            let t = ts.shape().1;
            let mut stdout = String::new();
            if let Err(e) = write_or_inline(&src.out, &od.to_text(), &mut stdout) {
                return CliOutput::usage(e);
            }
            if json {
                return json_out(
                    code,
                    json!({"order": od.order(), "signature": od.signature, "pass": report.passed(), "failure": report.failure}),
                );
            }
            let _ = writeln!(stdout, "OD({};{t},{t},{t},{t}): {report}", od.order());
            CliOutput::ok(code, stdout)
        }
        ConstructCmd::Hadamard { source, values } => {
            let ts = match source_ts(&source.from_record) {
                Ok(t) => t,
                Err(e) => return CliOutput::usage(e),
            };
            let od = match ts_to_od(&ts) {
                Ok(m) => m,
                Err(e) => return CliOutput::usage(e),
            };
            let (h, report) = match hadamard_from_od(&od, &values) {
                Ok(r) => r,
                Err(e) => return CliOutput::usage(e),
            };
            let code = if report.passed() { EXIT_OK } else { EXIT_FALSE };
            let order = od.order();
            let mut stdout = String::new();
            if let Err(e) = write_or_inline(&source.out, &h.to_pm_text(), &mut stdout) {
                return CliOutput::usage(e);
            }
            if json {
                return json_out(
                    code,
                    json!({"order": order, "pass": report.passed(), "failure": report.failure}),
                );
            }
            let _ = writeln!(stdout, "HHᵀ = {order}·I: {report}");
            CliOutput::ok(code, stdout)
        }
        ConstructCmd::Golay { length, ns } => {
            let pairs = match golay_search(length) {
                Ok(p) => p,
                Err(e) => return CliOutput::usage(e),
            };
            let code = if pairs.is_empty() { EXIT_FALSE } else { EXIT_OK };
            let lines: Vec<String> = pairs
                .iter()
                .map(|p| {
                    if ns {
                        format_record(&golay_to_ns(p))
                    } else {
                        p.plaintext()
                    }
                })
                .collect();
            if json {
                return json_out(code, json!({"length": length, "count": pairs.len(), "items": lines}));
            }
            let mut out = format!("golay({length}) count {}\n", pairs.len());
            for l in lines {
                let _ = writeln!(out, "{l}");
            }
            CliOutput::ok(code, out)
        }
    }
}

fn existence_code(e: Existence) -> i32 {
    match e {
        Existence::NonEmpty => EXIT_OK,
        Existence::Empty => EXIT_FALSE,
        Existence::Unknown => EXIT_USAGE,
    }
}

fn yang_text(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

fn catalog_cmd(cmd: CatalogCmd, json: bool) -> CliOutput {
    match cmd {
        CatalogCmd::Status { kind, order } => {
            let s = catalog::status(kind, order);
            let code = existence_code(s.status);
            if json {
                return json_out(code, serde_json::to_value(&s).expect("json"));
            }
            CliOutput::ok(
                code,
                format!(
                    "{}({order}) {:?}{}\n  {}\n",
                    s.kind,
                    s.status,
                    if s.witnessed { " (witnessed)" } else { "" },
                    s.provenance
                ),
            )
        }
        CatalogCmd::Yang { n, up_to } => match (n, up_to) {
            (Some(n), _) => {
                if n % 2 == 0 {
                    return CliOutput::usage(format!("{n} is even; Yang numbers are odd"));
                }
                let v = catalog::is_yang_number(n);
                let code = match v {
                    Some(true) => EXIT_OK,
                    Some(false) => EXIT_FALSE,
                    None => EXIT_USAGE,
                };
                if json {
                    return json_out(code, json!({"n": n, "yang": v}));
                }
                CliOutput::ok(code, format!("{n} {}\n", yang_text(v)))
            }
            (None, Some(limit)) => {
                let rows: Vec<(u64, Option<bool>)> = (1..=limit)
                    .step_by(2)
                    .map(|n| (n, catalog::is_yang_number(n)))
                    .collect();
                if json {
                    let v: Vec<Value> = rows.iter().map(|(n, y)| json!({"n": n, "yang": y})).collect();
                    return json_out(EXIT_OK, Value::Array(v));
                }
                let mut out = String::new();
                for (n, y) in rows {
                    let _ = writeln!(out, "{n} {}", yang_text(y));
                }
                CliOutput::ok(EXIT_OK, out)
            }
            (None, None) => CliOutput::usage("give n or --up-to N"),
        },
        CatalogCmd::Table1 => {
            let recs = catalog::table1_records();
            if json {
                let v: Vec<Value> = recs
                    .iter()
                    .map(|r| {
                        json!({
                            "record": r.record_line(),
                            "sums": [r.sums.a, r.sums.b, r.sums.c, r.sums.d],
                            "provenance": r.provenance,
                        })
                    })
                    .collect();
                return json_out(EXIT_OK, Value::Array(v));
            }
            let mut out = String::new();
            for r in &recs {
                let _ = writeln!(out, "{}  sums {}", r.record_line(), r.sums);
            }
            CliOutput::ok(EXIT_OK, out)
        }
        CatalogCmd::Golay { n } => {
            if n == 0 {
                return CliOutput::usage("n must be positive");
            }
            let g = is_golay_number(n);
            let code = if g { EXIT_OK } else { EXIT_FALSE };
            if json {
                return json_out(code, json!({"n": n, "golay": g}));
            }
            CliOutput::ok(code, format!("{n} {}\n", if g { "yes" } else { "no" }))
        }
        CatalogCmd::Check { path } => match catalog::archive_load(&path) {
            Ok(recs) => {
                let code = if recs.is_empty() { EXIT_FALSE } else { EXIT_OK };
                if json {
                    return json_out(code, json!({"records": recs.len(), "pass": true}));
                }
                CliOutput::ok(code, format!("{} records: pass\n", recs.len()))
            }
            Err(catalog::CatalogError::Verification { line, record, reason }) => {
                let msg = format!("line {line}: {record}: {reason}");
                if json {
                    return json_out(EXIT_FALSE, json!({"pass": false, "failure": msg}));
                }
                CliOutput::ok(EXIT_FALSE, format!("fail: {msg}\n"))
            }
            Err(e) => CliOutput::usage(e),
        },
        CatalogCmd::Save { path } => match catalog::archive_save(&catalog::table1_records(), &path) {
            Ok(()) => {
                if json {
                    return json_out(EXIT_OK, json!({"records": 6, "path": path.display().to_string()}));
                }
                CliOutput::ok(EXIT_OK, format!("6 records written to {}\n", path.display()))
            }
            Err(e) => CliOutput::usage(e),
        },
    }
}
