//! The `jaco` command line.
//!
//! Exit codes: 0 on success (and agreement), 1 on usage errors or refusals,
//! 2 on disagreement between methods or a violated invariant.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::JacoError;
use crate::fisher::{self, fisher_table};
use crate::graph::JacoGraph;
use crate::reconstruction::edges_reconstruction;
use crate::report::{EdgeCountReport, Method, ORACLE_MAX_N};
use crate::zeckendorf::{shifted_sum, Zeckendorf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

/// Bumped whenever a text format changes.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "jaco", version, about = "Finite Jaco graphs J_n(1): tables, edge counts, exports")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text (edges, crosscheck, zeck, bench).
    #[arg(long, global = true)]
    json: bool,

    /// Omit the versioned header comment line.
    #[arg(long, global = true)]
    bare: bool,

    /// Run the quadratic oracle beyond n = 100000.
    #[arg(long, global = true)]
    force: bool,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the per-vertex table (i, d-, d+, Δ, ε) for v_1..v_n.
    Table {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Count the edges of J_n(1).
    Edges {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Compare every feasible method for each n in LO..=HI.
    Crosscheck {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        lo: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        hi: u64,
    },
    /// Write the arcs of J_n(1).
    Export {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = ExportFormat::Edgelist)]
        format: ExportFormat,
    },
    /// Show the Zeckendorf decomposition of n with d+(v_n) and d-(v_n).
    Zeck {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Time every method for each given n.
    Bench {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        ns: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Edgelist,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Fisher,
    Zeckendorf,
    Reconstruction,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Oracle => vec![Method::Oracle],
            MethodArg::Fisher => vec![Method::Fisher],
            MethodArg::Zeckendorf => vec![Method::Zeckendorf],
            MethodArg::Reconstruction => vec![Method::Reconstruction],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Disagree(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<JacoError> for Failure {
    fn from(e: JacoError) -> Self {
        match e {
            JacoError::Invariant(_) | JacoError::NotSeeded => Failure::Disagree(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(file) => {
                let mut sink = BufWriter::new(file);
                let r = dispatch(&cli, &mut sink);
                match sink.flush() {
                    Ok(()) => r,
                    Err(e) => Err(Failure::Io(e)),
                }
            }
            Err(e) => Err(Failure::Usage(format!("cannot create {}: {e}", path.display()))),
        },
        None => dispatch(&cli, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Disagree(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DISAGREE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Table { n, format } => cmd_table(cli, n, format, out),
        Command::Edges { n, method } => cmd_edges(cli, n, method, out),
        Command::Crosscheck { lo, hi } => cmd_crosscheck(cli, lo, hi, out),
        Command::Export { n, format } => cmd_export(cli, n, format, out),
        Command::Zeck { n } => cmd_zeck(cli, n, out),
        Command::Bench { ref ns } => cmd_bench(cli, ns, out),
    }
}

fn header(cli: &Cli, out: &mut dyn Write, kind: &str) -> io::Result<()> {
    if !cli.bare {
        writeln!(out, "# jaco {kind} v{FORMAT_VERSION}")?;
    }
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn cmd_table(cli: &Cli, n: u64, format: TableFormat, out: &mut dyn Write) -> CmdResult {
    let rows = fisher_table(n)?;
    match format {
        TableFormat::Csv => {
            header(cli, out, "table csv")?;
            fisher::write_csv(&rows, out)?;
        }
        TableFormat::Pretty => {
            header(cli, out, "table pretty")?;
            fisher::write_pretty(&rows, out)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_edges(cli: &Cli, n: u64, method: MethodArg, out: &mut dyn Write) -> CmdResult {
    let methods = method.methods();
    if method == MethodArg::Oracle && n > ORACLE_MAX_N && !cli.force {
        return Err(Failure::Usage(format!(
            "the oracle builds the whole graph in O(n²); n = {n} exceeds {ORACLE_MAX_N} (pass --force to run it anyway)"
        )));
    }
    if methods.len() == 1 {
        // Single method: surface the typed error directly.
        methods[0].edges(n)?;
    }
    let report = EdgeCountReport::run(n, &methods, cli.force);
    if cli.json {
        write_json(out, &report)?;
    } else {
        header(cli, out, "edges")?;
        writeln!(out, "n {n}")?;
        for r in &report.results {
            match (r.edges, &r.skipped) {
                (Some(e), _) => writeln!(out, "{} {e}", r.method)?,
                (None, Some(why)) => writeln!(out, "{} skipped ({why})", r.method)?,
                (None, None) => writeln!(out, "{} skipped", r.method)?,
            }
        }
        if methods.len() > 1 {
            writeln!(out, "agree {}", report.agree)?;
        }
    }
    if !report.agree {
        return Err(Failure::Disagree(format!("methods disagree at n = {n}")));
    }
    if report.has_failure() {
        return Err(Failure::Disagree(format!("a method failed at n = {n}")));
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct CrosscheckRow {
    n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u64>,
    fisher: u64,
    zeckendorf: u64,
    reconstruction: Option<u64>,
    /// In-degree of v_n from each source that has one: oracle, fisher, index-shift rule.
    in_degree: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

impl CrosscheckRow {
    fn consistent(&self) -> bool {
        let edges_ok = [self.oracle, self.reconstruction]
            .iter()
            .flatten()
            .chain([&self.zeckendorf])
            .all(|&e| e == self.fisher);
        let deg_ok = self.in_degree.windows(2).all(|w| w[0] == w[1]);
        self.error.is_none() && self.reconstruction.is_some() && edges_ok && deg_ok
    }
}

#[derive(Debug, Serialize)]
struct CrosscheckSummary {
    lo: u64,
    hi: u64,
    methods: Vec<Method>,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_disagreement: Option<CrosscheckRow>,
}

/// Compares all methods for every n in `lo..=hi`.
///
/// Fisher rows and the oracle graph are built once at `hi`: cutting `J_hi(1)`
/// back to its first `n` vertices gives `J_n(1)`, so its in-degree prefix sums
/// are the oracle edge counts. The Zeckendorf formula is evaluated with a
/// running out-degree sum. Reconstruction runs independently per n.
fn crosscheck(lo: u64, hi: u64, use_oracle: bool) -> std::result::Result<CrosscheckSummary, Failure> {
    let rows = fisher_table(hi)?;
    let oracle = if use_oracle {
        Some(JacoGraph::build(hi)?)
    } else {
        None
    };

    let mut base: Vec<CrosscheckRow> = Vec::with_capacity((hi - lo + 1) as usize);
    let mut oracle_eps = 0u64;
    let mut out_sum = 0u128;
    for n in 1..=hi {
        let k = (n - 1) as usize;
        let out_n = shifted_sum(n);
        if n >= 2 {
            out_sum += out_n as u128;
        }
        let oracle_in = oracle.as_ref().map(|g| g.in_degrees()[k]);
        if let Some(d) = oracle_in {
            oracle_eps += d;
        }
        if n < lo {
            continue;
        }
        let zeckendorf = if n == 1 {
            0
        } else {
            (n as u128 * (n as u128 + 1) / 2 - 1 - out_sum) as u64
        };
        let mut in_degree: Vec<u64> = oracle_in.into_iter().collect();
        in_degree.push(rows[k].in_deg);
        in_degree.push(n - out_n);
        base.push(CrosscheckRow {
            n,
            oracle: oracle_in.map(|_| oracle_eps),
            fisher: rows[k].eps,
            zeckendorf,
            reconstruction: None,
            in_degree,
            error: None,
        });
    }

    base.par_iter_mut().for_each(|row| match edges_reconstruction(row.n) {
        Ok(e) => row.reconstruction = Some(e),
        Err(e) => row.error = Some(e.to_string()),
    });

    let mut methods = Vec::new();
    if use_oracle {
        methods.push(Method::Oracle);
    }
    methods.extend([Method::Fisher, Method::Zeckendorf, Method::Reconstruction]);
    let first_disagreement = base.into_iter().find(|r| !r.consistent());
    Ok(CrosscheckSummary {
        lo,
        hi,
        methods,
        ok: first_disagreement.is_none(),
        first_disagreement,
    })
}

fn cmd_crosscheck(cli: &Cli, lo: u64, hi: u64, out: &mut dyn Write) -> CmdResult {
    if lo > hi {
        return Err(Failure::Usage(format!("empty range {lo}..{hi}: LO must not exceed HI")));
    }
    let use_oracle = hi <= ORACLE_MAX_N || cli.force;
    let summary = crosscheck(lo, hi, use_oracle)?;
    if cli.json {
        write_json(out, &summary)?;
    } else {
        header(cli, out, "crosscheck")?;
        writeln!(out, "range {lo}..{hi}")?;
        let names: Vec<&str> = summary.methods.iter().map(|m| m.name()).collect();
        writeln!(out, "methods {}", names.join(","))?;
        if !use_oracle {
            writeln!(out, "oracle skipped (HI > {ORACLE_MAX_N}; pass --force)")?;
        }
        match &summary.first_disagreement {
            None => writeln!(out, "OK")?,
            Some(r) => {
                let show = |v: Option<u64>| v.map_or("-".to_owned(), |e| e.to_string());
                writeln!(
                    out,
                    "DISAGREE n={} oracle={} fisher={} zeckendorf={} reconstruction={} in_degree={:?}{}",
                    r.n,
                    show(r.oracle),
                    r.fisher,
                    r.zeckendorf,
                    show(r.reconstruction),
                    r.in_degree,
                    r.error.as_deref().map(|e| format!(" error={e}")).unwrap_or_default()
                )?;
            }
        }
    }
    Ok(if summary.ok { EXIT_OK } else { EXIT_DISAGREE })
}

fn cmd_export(cli: &Cli, n: u64, format: ExportFormat, out: &mut dyn Write) -> CmdResult {
    if n > ORACLE_MAX_N && !cli.force {
        return Err(Failure::Usage(format!(
            "J_{n}(1) has O(n²) arcs; exports are limited to n <= {ORACLE_MAX_N} (pass --force to override)"
        )));
    }
    let graph = JacoGraph::build(n)?;
    match format {
        ExportFormat::Edgelist => {
            header(cli, out, "edgelist")?;
            graph.write_edge_list(out)?;
        }
        ExportFormat::Dot => {
            if !cli.bare {
                writeln!(out, "// jaco dot v{FORMAT_VERSION}")?;
            }
            graph.write_dot(out)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct ZeckView {
    n: u64,
    indices: Vec<u32>,
    text: String,
    out_degree: u64,
    in_degree: u64,
}

fn cmd_zeck(cli: &Cli, n: u64, out: &mut dyn Write) -> CmdResult {
    let z = Zeckendorf::decompose(n)?;
    let out_degree = z.shifted_value();
    let view = ZeckView {
        n,
        indices: z.indices().to_vec(),
        text: z.canonical_form(),
        out_degree,
        in_degree: n - out_degree,
    };
    if cli.json {
        write_json(out, &view)?;
    } else {
        header(cli, out, "zeck")?;
        writeln!(out, "{}", view.text)?;
        writeln!(out, "d+ {}", view.out_degree)?;
        writeln!(out, "d- {}", view.in_degree)?;
    }
    Ok(EXIT_OK)
}

fn cmd_bench(cli: &Cli, ns: &[u64], out: &mut dyn Write) -> CmdResult {
    // Sequential on purpose: concurrent runs would skew the timings.
    let reports: Vec<EdgeCountReport> = ns
        .iter()
        .map(|&n| EdgeCountReport::run(n, &Method::ALL, cli.force))
        .collect();
    if cli.json {
        write_json(out, &reports)?;
    } else {
        header(cli, out, "bench")?;
        writeln!(out, "{:>12}  {:<14}  {:>20}  {:>14}", "n", "method", "edges", "elapsed_ms")?;
        for report in &reports {
            for r in &report.results {
                let edges = r.edges.map_or("skipped".to_owned(), |e| e.to_string());
                writeln!(
                    out,
                    "{:>12}  {:<14}  {:>20}  {:>14.3}",
                    report.n,
                    r.method.name(),
                    edges,
                    r.elapsed.as_secs_f64() * 1e3
                )?;
            }
            writeln!(out, "{:>12}  {:<14}  {:>20}", report.n, "agree", report.agree)?;
        }
    }
    let ok = reports.iter().all(|r| r.agree && !r.has_failure());
    Ok(if ok { EXIT_OK } else { EXIT_DISAGREE })
}
