//! `reebforge` command-line tool.
//!
//! Every command writes one JSON report (or DOT text for `reeb --graph --dot`) to stdout or to
//! `--output`. Exit status: 0 on success, 1 when a requested verification fails, 2 for input
//! and usage errors, 3 when a fiber-power computation exceeds the cell cap.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use reebforge::bounds::{univariate_sign_components, BoundName, BoundParams, BoundReport, Polynomial};
use reebforge::fixtures::{Fixture, FixtureSpec, FIXTURES};
use reebforge::homology::{betti_with_threads, BettiReport};
use reebforge::io::{self, ComplexDoc, Input, ReebGraphReport, ReebSpaceReport};
use reebforge::scalar::format_rational;
use reebforge::{
    b1_inequality_check, descent_check, fiber_power_betti, reeb_graph, reeb_space, verify_quotient,
    CoverMode, DescentTarget, Error, FiberMethod, NerveOptions, SimplicialMap, CELL_CAP_ENV,
    DEFAULT_CELL_CAP,
};

const EXIT_FAILED: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "reebforge", version, about = "Exact Reeb graphs, Reeb spaces and Betti-number bounds")]
struct Cli {
    /// Worker threads for homology computations (results do not depend on it).
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
    /// Cap on nerve simplices or cells built for a fiber power (overrides REEBFORGE_CELL_CAP).
    #[arg(long, global = true)]
    cell_cap: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rational Betti numbers of a complex file.
    Betti { complex: PathBuf },
    /// Reeb graph of a PL function or Reeb space of a simplicial map.
    Reeb(ReebArgs),
    /// Betti numbers of a fiber power of a simplicial map.
    FiberPower(FiberPowerArgs),
    /// Check descent, first-Betti, or quotient properties of a map.
    Verify(VerifyArgs),
    /// Evaluate a Betti-number bound exactly.
    Bounds(BoundsArgs),
    /// List or write built-in example inputs.
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

#[derive(Args, Debug)]
struct ReebArgs {
    /// Map or function file.
    input: PathBuf,
    /// Reeb graph of a function file.
    #[arg(long, conflicts_with = "space")]
    graph: bool,
    /// Reeb space of a map (functions are sliced into a map onto a segment first).
    #[arg(long)]
    space: bool,
    /// Emit the Reeb graph as DOT.
    #[arg(long, requires = "graph")]
    dot: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CoverArg {
    Tuples,
    Cells,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Nerve,
    Cells,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TargetArg {
    Image,
    Reeb,
}

#[derive(Args, Debug)]
struct FiberArgs {
    /// Fiber-power route.
    #[arg(long, value_enum, default_value = "cells")]
    method: MethodArg,
    /// Cover used by the nerve route.
    #[arg(long, value_enum, default_value = "cells")]
    cover: CoverArg,
}

#[derive(Args, Debug)]
struct FiberPowerArgs {
    map: PathBuf,
    /// Fiber power index: the (p+1)-fold fiber product.
    #[arg(long)]
    p: usize,
    /// Highest Betti number to compute (default: all).
    #[arg(long)]
    max_betti: Option<usize>,
    #[command(flatten)]
    fiber: FiberArgs,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("check").required(true).multiple(true).args(["descent", "b1", "quotient"])))]
struct VerifyArgs {
    /// Map file (function files are sliced into a map onto a segment).
    input: PathBuf,
    /// Descent inequality for p = 0..=P.
    #[arg(long, value_name = "P")]
    descent: Option<usize>,
    /// First Betti number of each Reeb space component is at most that of the domain.
    #[arg(long)]
    b1: bool,
    /// The computed quotient map is a valid Reeb quotient.
    #[arg(long)]
    quotient: bool,
    /// Target space of the descent check.
    #[arg(long, value_enum, default_value = "reeb", requires = "descent")]
    target: TargetArg,
    #[command(flatten)]
    fiber: FiberArgs,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// closed, general, sign-components, or reeb.
    name: String,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    /// Exponent constant for the Reeb bound.
    #[arg(long)]
    c: Option<u64>,
    /// Univariate polynomials (sign-components only); s and d default to the family's.
    #[arg(long = "poly", value_name = "POLY")]
    polys: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum FixturesCommand {
    /// List fixtures and their parameters.
    List,
    /// Write a fixture's complex, map and function files into a directory.
    Emit {
        name: String,
        /// Parameter assignment `key=value`; repeatable.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
}

enum Failure {
    Core(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, passed)) => {
            // for `fixtures emit`, -o names the directory and the report goes to stdout
            let output = match cli.command {
                Command::Fixtures(FixturesCommand::Emit { .. }) => None,
                _ => cli.output.as_deref(),
            };
            if let Err(e) = emit(output, &report) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_ERROR);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(EXIT_BUDGET),
                _ => ExitCode::from(EXIT_ERROR),
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn emit(output: Option<&Path>, report: &str) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, report),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(report.as_bytes())
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    let threads = cli.threads as usize;
    match &cli.command {
        Command::Betti { complex } => {
            let k = io::load_complex(complex)?;
            let b = betti_with_threads(&k, threads);
            Ok((io::to_json(&BettiReport::new(&k, &b)), true))
        }
        Command::Reeb(args) => cmd_reeb(args, threads),
        Command::FiberPower(args) => cmd_fiber_power(args, cell_cap(cli)?),
        Command::Verify(args) => cmd_verify(args, cell_cap(cli)?),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Fixtures(FixturesCommand::List) => Ok((fixture_list(), true)),
        Command::Fixtures(FixturesCommand::Emit { name, params }) => {
            let dir = cli.output.as_deref().ok_or_else(|| Failure::Usage("fixtures emit needs -o <dir>".into()))?;
            let files = emit_fixture(name, params, dir)?;
            Ok((io::to_json(&json!({ "fixture": name, "files": files })), true))
        }
    }
}

fn cell_cap(cli: &Cli) -> Result<usize, Failure> {
    if let Some(cap) = cli.cell_cap {
        return Ok(cap);
    }
    match std::env::var(CELL_CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{CELL_CAP_ENV}=`{v}` is not a number"))),
        Err(_) => Ok(DEFAULT_CELL_CAP),
    }
}

fn load_map(path: &Path) -> Result<SimplicialMap, Failure> {
    Ok(match io::load_input(path)? {
        Input::Map(m) => m,
        Input::Function(f) => f.level_subdivision().map,
    })
}

fn cmd_reeb(args: &ReebArgs, threads: usize) -> CmdResult {
    let input = io::load_input(&args.input)?;
    let graph = args.graph || (!args.space && matches!(input, Input::Function(_)));
    if graph {
        let Input::Function(f) = input else {
            return Err(Failure::Usage("--graph needs a function file".into()));
        };
        let g = reeb_graph(&f)?;
        if args.dot {
            return Ok((g.to_dot(format_rational), true));
        }
        return Ok((io::to_json(&ReebGraphReport::new(&g, format_rational)), true));
    }
    let map = match input {
        Input::Map(m) => m,
        Input::Function(f) => f.level_subdivision().map,
    };
    let r = reeb_space(&map)?;
    let b = betti_with_threads(r.realization(), threads);
    Ok((io::to_json(&ReebSpaceReport::new(&r, &b)), true))
}

fn nerve_options(fiber: &FiberArgs, cap: usize) -> (FiberMethod, NerveOptions) {
    let method = match fiber.method {
        MethodArg::Nerve => FiberMethod::Nerve,
        MethodArg::Cells => FiberMethod::Cells,
    };
    let mode = match fiber.cover {
        CoverArg::Tuples => CoverMode::MaximalTuples,
        CoverArg::Cells => CoverMode::MaximalCells,
    };
    (method, NerveOptions { mode, cell_cap: cap, max_dim: None })
}

fn cmd_fiber_power(args: &FiberPowerArgs, cap: usize) -> CmdResult {
    let map = load_map(&args.map)?;
    let (method, opts) = nerve_options(&args.fiber, cap);
    // the fiber power has dimension at most (p+1) dim K
    let top = (args.p + 1) * map.domain().dim().unwrap_or(0);
    let max = args.max_betti.unwrap_or(top);
    let (b, size) = fiber_power_betti(&map, args.p, max, method, &opts)?;
    let report = json!({ "p": args.p, "method": method, "size": size, "betti": b.b, "total": b.total });
    Ok((io::to_json(&report), true))
}

fn cmd_verify(args: &VerifyArgs, cap: usize) -> CmdResult {
    let map = load_map(&args.input)?;
    let mut report = serde_json::Map::new();
    let mut passed = true;
    if let Some(p_max) = args.descent {
        let target = match args.target {
            TargetArg::Image => DescentTarget::Image,
            TargetArg::Reeb => DescentTarget::Reeb,
        };
        let (method, opts) = nerve_options(&args.fiber, cap);
        let rep = descent_check(&map, target, p_max, method, &opts)?;
        passed &= rep.holds;
        report.insert("descent".into(), serde_json::to_value(&rep).expect("serializable"));
    }
    if args.b1 {
        let rep = b1_inequality_check(&map)?;
        passed &= rep.holds;
        report.insert("b1".into(), serde_json::to_value(&rep).expect("serializable"));
    }
    if args.quotient {
        let rep = verify_quotient(&map)?;
        passed &= rep.passed;
        report.insert("quotient".into(), serde_json::to_value(&rep).expect("serializable"));
    }
    report.insert("passed".into(), passed.into());
    Ok((io::to_json(&report), passed))
}

fn cmd_bounds(args: &BoundsArgs) -> CmdResult {
    let name = BoundName::from_str(&args.name)?;
    let polys = args.polys.iter().map(|p| p.parse::<Polynomial>()).collect::<Result<Vec<_>, _>>()?;
    if !polys.is_empty() && name != BoundName::SignComponents {
        return Err(Failure::Usage("--poly only applies to sign-components".into()));
    }
    let family_s = (!polys.is_empty()).then_some(polys.len() as u64);
    let family_d = polys.iter().map(|p| p.degree() as u64).max().map(|d| d.max(1));
    let mut params = BoundParams::default();
    let given = [("s", args.s.or(family_s)), ("d", args.d.or(family_d)), ("k", args.k), ("n", args.n), ("m", args.m), ("c", args.c)];
    for (key, value) in given {
        let used = name.parameters().contains(&key);
        match (value, used) {
            (Some(_), false) => return Err(Failure::Usage(format!("{} does not take --{key}", name.as_str()))),
            (None, true) => return Err(Failure::Usage(format!("{} needs --{key}", name.as_str()))),
            (Some(v), true) => match key {
                "s" => params.s = v,
                "d" => params.d = v,
                "k" => params.k = v,
                "n" => params.n = v,
                "m" => params.m = v,
                _ => params.c = v,
            },
            (None, false) => {}
        }
    }
    if !polys.is_empty() && params.k != 1 {
        return Err(Failure::Usage("polynomial families are univariate; use --k 1".into()));
    }
    let report = BoundReport::new(name, &params)?;
    if polys.is_empty() {
        return Ok((io::to_json(&report), true));
    }
    let actual = univariate_sign_components(&polys)?;
    let within = num_bigint::BigUint::from(actual) <= report.value.parse::<num_bigint::BigUint>().expect("decimal");
    let mut value = serde_json::to_value(&report).expect("serializable");
    value["polynomials"] = polys.iter().map(ToString::to_string).collect::<Vec<_>>().into();
    value["actual"] = actual.into();
    value["within_bound"] = within.into();
    Ok((io::to_json(&value), within))
}

fn fixture_list() -> String {
    let mut out = String::new();
    for f in FIXTURES {
        let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("{:<16} {:<20} {}\n", f.name, params.join(" "), f.summary));
    }
    out
}

fn parse_params(name: &str, raw: &[String]) -> Result<FixtureSpec, Failure> {
    let mut spec = FixtureSpec::new(name);
    for item in raw {
        let (k, v) = item.split_once('=').ok_or_else(|| Failure::Usage(format!("expected key=value, got `{item}`")))?;
        let v: i64 = v.trim().parse().map_err(|_| Failure::Usage(format!("parameter `{k}` needs an integer")))?;
        spec = spec.with(k.trim(), v);
    }
    Ok(spec)
}

fn write(dir: &Path, name: &str, text: String, files: &mut Vec<String>) -> Result<(), Failure> {
    let path = dir.join(name);
    fs::write(&path, text).map_err(|e| Failure::Core(Error::Io(format!("{}: {e}", path.display()))))?;
    files.push(name.to_string());
    Ok(())
}

fn emit_fixture(name: &str, params: &[String], dir: &Path) -> Result<Vec<String>, Failure> {
    let fixture = parse_params(name, params)?.build()?;
    fs::create_dir_all(dir).map_err(|e| Failure::Core(Error::Io(format!("{}: {e}", dir.display()))))?;
    let mut files = Vec::new();
    let map = fixture.map();
    write(dir, "domain.json", io::to_json(&ComplexDoc::from_complex(map.domain())), &mut files)?;
    write(dir, "codomain.json", io::to_json(&ComplexDoc::from_complex(map.codomain())), &mut files)?;
    let doc = io::map_doc(map, "domain.json".into(), "codomain.json".into());
    write(dir, "map.json", io::to_json(&doc), &mut files)?;
    if let Fixture::Function { function, .. } = &fixture {
        write(dir, "complex.json", io::to_json(&ComplexDoc::from_complex(function.complex())), &mut files)?;
        write(dir, "function.json", io::to_json(&io::function_doc(function, "complex.json".into())), &mut files)?;
    }
    Ok(files)
}
