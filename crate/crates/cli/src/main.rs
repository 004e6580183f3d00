use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fgc_core::format::{to_edge_list, to_json};
use fgc_core::growth::z_bounds_table;
use fgc_core::oracle::{
    count_perfect_matchings, max_matching_search, min_domination_search, role_vertex, CoverState, DominationConstraint,
    MatchingConstraint, MemberState, OracleConfig, VertexConstraint,
};
use fgc_core::recurrence::{
    domination_counts, domination_sizes, ext_hanoi_domination_number, hanoi_matching_counts, matching_counts,
    matching_sizes,
};
use fgc_core::report::{count_table, growth_csv, growth_text};
use fgc_core::structures::{
    apollonian_mds_in, build_code_class, build_perfect_matching_ext_hanoi, build_pm_hanoi_minus_extremes,
};
use fgc_core::verify::{self, VerifyOptions};
use fgc_core::{Error, Exec, Family, FamilySpec, Method, VertexRole};
use serde_json::{json, Value};

const BUDGET_ENV: &str = "FGC_ORACLE_BUDGET";

#[derive(Parser)]
#[command(
    name = "fgc",
    version,
    about = "Matchings and dominating sets of Apollonian and Hanoi graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph as an edge list or JSON.
    Generate {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search for an optimum and the number of optimal solutions.
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum)]
        problem: Problem,
        /// Comma-separated `role=cover|vacate|include|exclude`, e.g. `X=cover,Y=vacate`.
        #[arg(long, default_value = "")]
        constraints: String,
        #[arg(long, value_enum, default_value_t = ExecArg::Parallel)]
        exec: ExecArg,
    },
    /// Evaluate one of the recursions at `n`.
    Recur {
        #[arg(long, value_enum)]
        quantity: Quantity,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The matching-count table for n = 1..5.
    Table1 {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Lower and upper bounds on the matching growth constant.
    Growth {
        #[arg(long, default_value_t = 7)]
        max_m: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a constructed perfect matching or minimum dominating set.
    Witness {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum)]
        what: WitnessKind,
        /// Parity class (1..=4) for dominating sets of extended Hanoi graphs.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Cross-check exhaustive search, recursions and constructions.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_oracle_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(clap::Args)]
struct GraphArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_method, default_value = "iterative")]
    method: Method,
}

impl GraphArgs {
    fn spec(&self) -> FamilySpec {
        FamilySpec::new(self.family, self.n).with_method(self.method)
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Matching,
    Domination,
    PerfectCount,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExecArg {
    Parallel,
    Sequential,
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    MatchingSizes,
    MatchingCounts,
    DominationSizes,
    DominationCounts,
    HanoiMatchings,
    ExtHanoiDomination,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    PerfectMatching,
    Mds,
}

enum Failure {
    Usage(String),
    Verify(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Failure::Resource(e.to_string()),
            Error::InvariantViolation(_) => Failure::Verify(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn oracle_config(exec: Exec) -> Result<OracleConfig, Failure> {
    let cfg = OracleConfig::default().with_exec(exec);
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(|b| cfg.with_budget(b))
            .map_err(|_| Failure::Usage(format!("{BUDGET_ENV} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(cfg),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize") + "\n"
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types always serialize")
}

enum Parsed {
    Matching(Vec<MatchingConstraint>),
    Domination(Vec<DominationConstraint>),
}

/// Parse a constraint pattern against `g`; the problem decides which states
/// are legal.
fn parse_constraints(g: &fgc_core::LabeledGraph, pattern: &str, problem: Problem) -> Result<Parsed, Failure> {
    let mut matching = Vec::new();
    let mut domination = Vec::new();
    for item in pattern.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (role, state) = item
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("constraint `{item}` is not of the form role=state")))?;
        let role: VertexRole = role.trim().parse()?;
        let v = role_vertex(g, role)?;
        match (problem, state.trim()) {
            (Problem::Matching, "cover") => matching.push(VertexConstraint::new(v, CoverState::MustCover)),
            (Problem::Matching, "vacate") => matching.push(VertexConstraint::new(v, CoverState::MustVacate)),
            (Problem::Domination, "include") => domination.push(VertexConstraint::new(v, MemberState::MustInclude)),
            (Problem::Domination, "exclude") => domination.push(VertexConstraint::new(v, MemberState::MustExclude)),
            (_, s) => return Err(Failure::Usage(format!("state `{s}` is not valid for this problem"))),
        }
    }
    Ok(match problem {
        Problem::Domination => Parsed::Domination(domination),
        _ => Parsed::Matching(matching),
    })
}

fn cmd_generate(graph: &GraphArgs, format: GraphFormat, out: Option<&PathBuf>) -> Outcome {
    let g = graph.spec().generate()?;
    let text = match format {
        GraphFormat::Edgelist => to_edge_list(&g),
        GraphFormat::Json => pretty(&to_json(&g)),
    };
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn cmd_solve(graph: &GraphArgs, problem: Problem, pattern: &str, exec: ExecArg) -> Outcome {
    let exec = match exec {
        ExecArg::Parallel => Exec::Parallel,
        ExecArg::Sequential => Exec::Sequential,
    };
    let cfg = oracle_config(exec)?;
    let g = graph.spec().generate()?;
    let (mode, size, count) = match (problem, parse_constraints(&g, pattern, problem)?) {
        (Problem::PerfectCount, Parsed::Matching(c)) => {
            if !c.is_empty() {
                return Err(Failure::Usage("perfect-count takes no constraints".into()));
            }
            let count = count_perfect_matchings(&g, &cfg)?;
            let size = (count != 0u32.into()).then_some(g.vertex_count() / 2);
            ("perfect-count", size, count)
        }
        (_, Parsed::Matching(c)) => {
            let r = max_matching_search(&g, &c, &cfg)?;
            ("matching", r.max_size, r.count_at_max)
        }
        (_, Parsed::Domination(c)) => {
            let r = min_domination_search(&g, &c, &cfg)?;
            ("domination", r.min_size, r.count_at_min)
        }
    };
    Ok(pretty(&json!({
        "family": g.family().as_str(),
        "n": g.n(),
        "mode": mode,
        "constraints": pattern,
        "size": size,
        "count": count.to_string(),
    })))
}

/// Flat `key: value` rendering of a JSON object; arrays are space-joined.
fn object_text(v: &Value) -> String {
    let scalar = |x: &Value| match x {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let mut out = String::new();
    if let Value::Object(map) = v {
        for (k, x) in map {
            let rendered = match x {
                Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(" "),
                other => scalar(other),
            };
            out.push_str(&format!("{k}: {rendered}\n"));
        }
    }
    out
}

fn cmd_recur(quantity: Quantity, n: usize, format: Format) -> Outcome {
    let v = match quantity {
        Quantity::MatchingSizes => to_value(&matching_sizes(n)?),
        Quantity::MatchingCounts => to_value(&matching_counts(n)?),
        Quantity::DominationSizes => to_value(&domination_sizes(n)?),
        Quantity::DominationCounts => to_value(&domination_counts(n)?),
        Quantity::HanoiMatchings => to_value(&hanoi_matching_counts(n)?),
        Quantity::ExtHanoiDomination => to_value(&ext_hanoi_domination_number(n)?),
    };
    match format {
        Format::Json => Ok(pretty(&v)),
        Format::Text => Ok(object_text(&v)),
        Format::Csv => Err(Failure::Usage("recur supports json and text output".into())),
    }
}

fn cmd_table1(format: Format) -> Outcome {
    let t = count_table(&oracle_config(Exec::Parallel)?)?;
    Ok(match format {
        Format::Json => pretty(&to_value(&t)),
        Format::Csv => t.to_csv(),
        Format::Text => t.to_text(),
    })
}

fn cmd_growth(max_m: usize, format: Format) -> Outcome {
    let bounds = z_bounds_table(max_m)?;
    Ok(match format {
        Format::Json => pretty(&to_value(&bounds)),
        Format::Csv => growth_csv(&bounds),
        Format::Text => growth_text(&bounds),
    })
}

fn cmd_witness(graph: &GraphArgs, what: WitnessKind, k: usize) -> Outcome {
    let n = graph.n;
    let v = match (graph.family, what) {
        (Family::ExtHanoi, WitnessKind::PerfectMatching) => to_value(&build_perfect_matching_ext_hanoi(n)?),
        (Family::Hanoi, WitnessKind::PerfectMatching) => to_value(&build_pm_hanoi_minus_extremes(n)?),
        (Family::ExtHanoi, WitnessKind::Mds) => to_value(&build_code_class(n, k)?),
        (Family::Apollonian, WitnessKind::Mds) => to_value(&apollonian_mds_in(&graph.spec().generate()?)?),
        (family, _) => return Err(Failure::Usage(format!("no such witness for {family}"))),
    };
    Ok(serde_json::to_string(&v).expect("JSON values always serialize") + "\n")
}

fn cmd_verify(max_oracle_n: usize, format: Format, inject_fault: bool) -> Outcome {
    let opts = VerifyOptions {
        max_oracle_n,
        inject_fault,
        oracle: oracle_config(Exec::Parallel)?,
    };
    let report = verify::run(&opts)?;
    let text = match format {
        Format::Json => pretty(&to_value(&report)),
        _ => report.to_text(),
    };
    if report.all_passed() {
        Ok(text)
    } else {
        print!("{text}");
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        Err(Failure::Verify(format!("failed: {}", names.join("; "))))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Generate { graph, format, out } => cmd_generate(graph, *format, out.as_ref()),
        Command::Solve {
            graph,
            problem,
            constraints,
            exec,
        } => cmd_solve(graph, *problem, constraints, *exec),
        Command::Recur { quantity, n, format } => cmd_recur(*quantity, *n, *format),
        Command::Table1 { format } => cmd_table1(*format),
        Command::Growth { max_m, format } => cmd_growth(*max_m, *format),
        Command::Witness { graph, what, k } => cmd_witness(graph, *what, *k),
        Command::Verify {
            max_oracle_n,
            format,
            inject_fault,
        } => cmd_verify(*max_oracle_n, *format, *inject_fault),
    };
    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("fgc: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("fgc: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("fgc: {msg}");
            ExitCode::from(3)
        }
    }
}
