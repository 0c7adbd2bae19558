use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use triad_core::coloring::{analyze, check_certificate, GrundyCertificate, InvariantReport};
use triad_core::constructions::{
    basic_bipartite, extended_graph, g_star, is_realizable, l_graph, min_order, realize,
    reduced_graph, LVariant, Triple,
};
use triad_core::enumeration::{Census, Generator, MAX_GENERATION_ORDER};
use triad_core::suite::{Suite, Verdict};
use triad_core::{parse_graph6, write_graph6, Error, Graph};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_INCOMPLETE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "triad",
    version,
    about = "Exact χ, Γ and ψ of small graphs, extremal constructions and exhaustive checks"
)]
struct Cli {
    /// Worker threads (default: available cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Human-readable tables instead of JSON Lines.
    #[arg(long, global = true)]
    pretty: bool,

    /// Unlock the long-running checks (10-vertex sweeps).
    #[arg(long, global = true)]
    extended: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// ω, χ, Γ, ψ and witnesses for each graph6 line.
    Analyze(InputArgs),
    /// Build one of the extremal families.
    Construct(ConstructArgs),
    /// Minimum order of a connected graph with (χ, Γ, ψ) = (f, g, h).
    MinOrder(TripleArgs),
    /// A minimum-order connected graph with (χ, Γ, ψ) = (f, g, h).
    Realize {
        #[command(flatten)]
        triple: TripleArgs,
        /// Also print the vertex labels.
        #[arg(long)]
        labels: bool,
    },
    /// Connected graphs up to isomorphism, or the h-optimal graphs.
    Enumerate(EnumerateArgs),
    /// Check the minimum-order and h-optimal statements by exhaustive search.
    Verify {
        #[command(subcommand)]
        scope: VerifyScope,
    },
    /// Check a Grundy lower-bound certificate.
    Certify {
        #[command(flatten)]
        input: InputArgs,
        /// Certificate as JSON: {"h_set": [...], "s_set": [...], "k": K}.
        #[arg(long, conflicts_with = "cert_file")]
        cert: Option<String>,
        /// File holding the certificate JSON.
        #[arg(long)]
        cert_file: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// graph6 strings; read from --input or standard input when absent.
    #[arg(conflicts_with = "input")]
    graphs: Vec<String>,
    /// File of graph6 lines.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct TripleArgs {
    #[arg(long)]
    f: usize,
    #[arg(long)]
    g: usize,
    #[arg(long)]
    h: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Bk,
    Gstar,
    Reduced,
    Extended,
    L1,
    L2,
    Kf,
}

#[derive(Args)]
struct ConstructArgs {
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    f: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    /// Also print the vertex labels.
    #[arg(long)]
    labels: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Order of the connected graphs to list.
    #[arg(
        long,
        conflicts_with = "hoptimal",
        required_unless_present = "hoptimal"
    )]
    n: Option<usize>,
    /// Print {n, class_count, elapsed_ms} instead of the graphs.
    #[arg(long, requires = "n")]
    count: bool,
    /// List the h-optimal graphs with their invariant reports.
    #[arg(long, value_name = "H")]
    hoptimal: Option<usize>,
    /// Write to a file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyScope {
    /// Formula against exhaustive search for one triple.
    Minorder(TripleArgs),
    /// Count the h-optimal graphs.
    Hoptimal {
        #[arg(long)]
        h: usize,
    },
    /// Every criterion of the verification battery.
    PaperSuite,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_DATA,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::data(format!("i/o error: {e}"))
    }
}

/// Builder argument errors are usage errors, everything else is data.
fn lib_failure(e: Error) -> Failure {
    match e {
        Error::InvalidArgument(_) => Failure::usage(e.to_string()),
        _ => Failure::data(e.to_string()),
    }
}

type Outcome = Result<u8, Failure>;

struct Out {
    w: Box<dyn Write>,
    pretty: bool,
}

impl Out {
    fn stdout(pretty: bool) -> Self {
        Out {
            w: Box::new(BufWriter::new(io::stdout().lock())),
            pretty,
        }
    }

    fn to(path: Option<&PathBuf>, pretty: bool) -> Result<Self, Failure> {
        Ok(match path {
            Some(p) => Out {
                w: Box::new(BufWriter::new(File::create(p)?)),
                pretty,
            },
            None => Out::stdout(pretty),
        })
    }

    fn line(&mut self, s: &str) -> io::Result<()> {
        writeln!(self.w, "{s}")
    }

    fn json<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        let s = if self.pretty {
            serde_json::to_string_pretty(value)
        } else {
            serde_json::to_string(value)
        }
        .expect("serializable");
        self.line(&s)
    }
}

fn read_lines(input: &InputArgs) -> Result<Vec<String>, Failure> {
    if !input.graphs.is_empty() {
        return Ok(input.graphs.clone());
    }
    let reader: Box<dyn BufRead> = match &input.input {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(BufReader::new(io::stdin())),
    };
    let mut lines = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let trimmed = line.trim();
        if !trimmed.is_empty() {
            lines.push(trimmed.to_string());
        }
    }
    Ok(lines)
}

fn print_graph(out: &mut Out, g: &Graph, labels: bool) -> io::Result<()> {
    out.line(&write_graph6(g))?;
    if labels {
        let names: Vec<String> = (0..g.n()).map(|v| g.label(v)).collect();
        out.json(&json!({ "labels": names }))?;
    }
    Ok(())
}

fn cmd_analyze(input: &InputArgs, pretty: bool) -> Outcome {
    let lines = read_lines(input)?;
    let results: Vec<Result<InvariantReport, String>> = lines
        .par_iter()
        .map(|l| {
            let g = parse_graph6(l).map_err(|e| e.to_string())?;
            analyze(&g).map_err(|e| e.to_string())
        })
        .collect();
    let mut out = Out::stdout(false);
    let mut code = EXIT_OK;
    if pretty {
        out.line(&format!(
            "{:<20} {:>3} {:>4} {:>3} {:>3} {:>3} {:>3}",
            "graph6", "n", "m", "ω", "χ", "Γ", "ψ"
        ))?;
    }
    for (line, r) in lines.iter().zip(results) {
        match r {
            Ok(rep) if pretty => out.line(&format!(
                "{:<20} {:>3} {:>4} {:>3} {:>3} {:>3} {:>3}",
                line, rep.n, rep.m, rep.omega, rep.chi, rep.gamma, rep.psi
            ))?,
            Ok(rep) => out.json(&rep)?,
            Err(e) => {
                code = EXIT_DATA;
                out.json(&json!({ "input": line, "error": e }))?;
            }
        }
    }
    Ok(code)
}

fn need(v: Option<usize>, name: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::usage(format!("this family needs --{name}")))
}

fn cmd_construct(a: &ConstructArgs, pretty: bool) -> Outcome {
    let g = match a.family {
        Family::Bk => basic_bipartite(need(a.k, "k")?),
        Family::Gstar => g_star(need(a.g, "g")?, need(a.h, "h")?),
        Family::Reduced => reduced_graph(need(a.t, "t")?),
        Family::Extended => extended_graph(need(a.ell, "ell")?),
        Family::L1 => l_graph(need(a.h, "h")?, LVariant::L1),
        Family::L2 => l_graph(need(a.h, "h")?, LVariant::L2),
        Family::Kf => Graph::complete(need(a.f, "f")?),
    }
    .map_err(|e| Failure::usage(e.to_string()))?;
    print_graph(&mut Out::stdout(pretty), &g, a.labels)?;
    Ok(EXIT_OK)
}

fn triple(t: TripleArgs) -> Result<Triple, Failure> {
    Triple::new(t.f, t.g, t.h).map_err(lib_failure)
}

fn cmd_min_order(t: TripleArgs, pretty: bool) -> Outcome {
    let t = triple(t)?;
    let mut out = Out::stdout(pretty);
    if !is_realizable(t) {
        out.json(&json!({ "triple": [t.f, t.g, t.h], "realizable": false }))?;
        return Ok(EXIT_DATA);
    }
    let n = min_order(t).map_err(lib_failure)?;
    out.json(&json!({ "triple": [t.f, t.g, t.h], "realizable": true, "min_order": n }))?;
    Ok(EXIT_OK)
}

fn cmd_realize(t: TripleArgs, labels: bool, pretty: bool) -> Outcome {
    let g = realize(triple(t)?).map_err(lib_failure)?;
    print_graph(&mut Out::stdout(pretty), &g, labels)?;
    Ok(EXIT_OK)
}

fn cmd_enumerate(a: &EnumerateArgs, pretty: bool, extended: bool) -> Outcome {
    let mut out = Out::to(a.output.as_ref(), pretty)?;
    if let Some(h) = a.hoptimal {
        if h == 6 && !extended {
            return Err(Failure::usage(
                "h = 6 scans 11.7 million graphs; pass --extended",
            ));
        }
        let scan = Census::new().h_optimal(h).map_err(lib_failure)?;
        for g in &scan.graphs {
            let report = analyze(g).map_err(lib_failure)?;
            out.json(&json!({ "graph6": write_graph6(g), "report": report }))?;
        }
        return Ok(EXIT_OK);
    }
    let n = a.n.expect("clap requires --n without --hoptimal");
    if n >= 10 && !extended {
        return Err(Failure::usage(
            "n = 10 has 11.7 million graphs; pass --extended",
        ));
    }
    let mut generator = Generator::new();
    if a.count {
        let start = Instant::now();
        let count = generator.count(n).map_err(lib_failure)?;
        let elapsed_ms = start.elapsed().as_millis() as u64;
        out.json(&json!({ "n": n, "class_count": count, "elapsed_ms": elapsed_ms }))?;
        return Ok(EXIT_OK);
    }
    let mut err = None;
    generator
        .for_each(n, |g| {
            if err.is_none() {
                if let Err(e) = out.line(&write_graph6(g)) {
                    err = Some(e);
                }
            }
        })
        .map_err(lib_failure)?;
    if let Some(e) = err {
        return Err(e.into());
    }
    Ok(EXIT_OK)
}

fn emit_verdict(out: &mut Out, v: &Verdict) -> io::Result<()> {
    if out.pretty {
        let status = match (&v.skipped, v.pass) {
            (Some(why), _) => format!("SKIP ({why})"),
            (None, true) => "PASS".into(),
            (None, false) => "FAIL".into(),
        };
        out.line(&format!(
            "[{:>2}] {:<14} {}  expected={} computed={}",
            v.criterion, status, v.claim, v.expected, v.computed
        ))
    } else {
        out.json(v)
    }
}

fn verdict_code(v: &Verdict) -> u8 {
    match (&v.skipped, v.pass) {
        (Some(_), _) => EXIT_INCOMPLETE,
        (None, true) => EXIT_OK,
        (None, false) => EXIT_DATA,
    }
}

fn cmd_verify(scope: &VerifyScope, pretty: bool, extended: bool) -> Outcome {
    let mut out = Out::stdout(pretty);
    let mut suite = Suite::new(extended);
    match scope {
        VerifyScope::Minorder(t) => {
            let t = triple(*t)?;
            let formula = min_order(t).map_err(lib_failure)?;
            let v = if formula > MAX_GENERATION_ORDER {
                Verdict::skipped(0, format!("minimum order of {t}"), "capacity")
            } else {
                suite.min_order_verdict(0, t).map_err(lib_failure)?
            };
            emit_verdict(&mut out, &v)?;
            Ok(verdict_code(&v))
        }
        VerifyScope::Hoptimal { h } => {
            let v = suite.h_optimal_verdict(0, *h).map_err(lib_failure)?;
            emit_verdict(&mut out, &v)?;
            Ok(verdict_code(&v))
        }
        VerifyScope::PaperSuite => {
            let mut io_err = None;
            let all = suite
                .run(|v| {
                    if let Err(e) = emit_verdict(&mut out, v) {
                        io_err.get_or_insert(e);
                    }
                })
                .map_err(lib_failure)?;
            if let Some(e) = io_err {
                return Err(e.into());
            }
            Ok(if all { EXIT_OK } else { EXIT_DATA })
        }
    }
}

fn cmd_certify(
    input: &InputArgs,
    cert: Option<&str>,
    cert_file: Option<&PathBuf>,
    pretty: bool,
) -> Outcome {
    let text = match (cert, cert_file) {
        (Some(c), _) => c.to_string(),
        (None, Some(p)) => {
            let mut s = String::new();
            File::open(p)?.read_to_string(&mut s)?;
            s
        }
        (None, None) => return Err(Failure::usage("pass --cert or --cert-file")),
    };
    let cert: GrundyCertificate = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("malformed certificate: {e}")))?;
    let lines = read_lines(input)?;
    let [line] = lines.as_slice() else {
        return Err(Failure::usage("certify takes exactly one graph"));
    };
    let g = parse_graph6(line).map_err(|e| Failure::data(e.to_string()))?;
    let check = check_certificate(&g, &cert).map_err(|e| Failure::data(e.to_string()))?;
    Out::stdout(pretty).json(&check)?;
    Ok(if check.valid { EXIT_OK } else { EXIT_DATA })
}

fn run(cli: Cli) -> Outcome {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Analyze(input) => cmd_analyze(input, cli.pretty),
        Command::Construct(a) => cmd_construct(a, cli.pretty),
        Command::MinOrder(t) => cmd_min_order(*t, cli.pretty),
        Command::Realize { triple, labels } => cmd_realize(*triple, *labels, cli.pretty),
        Command::Enumerate(a) => cmd_enumerate(a, cli.pretty, cli.extended),
        Command::Verify { scope } => cmd_verify(scope, cli.pretty, cli.extended),
        Command::Certify {
            input,
            cert,
            cert_file,
        } => cmd_certify(input, cert.as_deref(), cert_file.as_ref(), cli.pretty),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
