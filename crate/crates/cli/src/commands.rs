use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use pursuit_core::characterizations::{
    bound_audit, cc_equals_one, girth5_lower_bound, outerplanar_cc2_check, square_lower_bound, subdivision_lower_bound,
    triangle_free_cc_at_most_2, DEFAULT_GAMMA_BUDGET,
};
use pursuit_core::constructions::{line_graph, square_minus_edges, subdivide_all_edges};
use pursuit_core::game::{extract_strategy, play, DEFAULT_BUDGET_STATES};
use pursuit_core::graph6::encode_graph6;
use pursuit_core::structure::{degree_stats, girth, is_bipartite};
use pursuit_core::{attacking_cop_number, cop_number, Certificate, EmbeddingFaces, GameKind, Graph, Side, SolveOptions};

use crate::error::{CliError, CliResult};
use crate::graphio::{load_corpus, load_graph, write_graph, Format};
use crate::report::*;
use crate::table::write_table;
use crate::trace::{trace_dot, trace_json};

/// Environment variable overriding the default state budget.
pub const BUDGET_ENV: &str = "PURSUIT_BUDGET_STATES";

#[derive(Debug, Parser)]
#[command(name = "pursuit", version, about = "Exact cop numbers for Cops and Robbers and Cops and Attacking Robbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the (attacking) cop number by exhaustive solving.
    Solve(SolveArgs),
    /// Evaluate a characterisation or a lower-bound certificate.
    Certify(CertifyArgs),
    /// Build a derived graph and print its basic invariants.
    Construct(ConstructArgs),
    /// Check the general bounds over a corpus of graphs.
    Audit(AuditArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GameArg {
    Classic,
    Attacking,
}

impl From<GameArg> for GameKind {
    fn from(g: GameArg) -> Self {
        match g {
            GameArg::Classic => GameKind::Classic,
            GameArg::Attacking => GameKind::Attacking,
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub game: GameArg,
    /// Graph file or `builtin:NAME`.
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub max_cops: usize,
    /// Maximum number of labelled positions.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Write the final table as a binary dump.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Write an optimal play-out from the placement (`.dot` for DOT, else JSON).
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Round limit for the trace.
    #[arg(long, default_value_t = 1000)]
    pub max_rounds: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LemmaArg {
    Girth5,
    Subdivision,
    Square,
    #[value(name = "cc2-trianglefree")]
    Cc2TriangleFree,
    Cc1,
    #[value(name = "outerplanar-cc2")]
    OuterplanarCc2,
}

impl LemmaArg {
    fn as_str(self) -> &'static str {
        match self {
            LemmaArg::Girth5 => "girth5",
            LemmaArg::Subdivision => "subdivision",
            LemmaArg::Square => "square",
            LemmaArg::Cc2TriangleFree => "cc2-trianglefree",
            LemmaArg::Cc1 => "cc1",
            LemmaArg::OuterplanarCc2 => "outerplanar-cc2",
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct CertifyArgs {
    #[arg(long, value_enum)]
    pub lemma: LemmaArg,
    #[arg(long)]
    pub graph: String,
    /// Largest dominating set size tried by exact searches.
    #[arg(long, default_value_t = DEFAULT_GAMMA_BUDGET)]
    pub gamma_budget: usize,
    /// Faces of the outerplanar embedding, one cycle of vertex ids per line.
    #[arg(long)]
    pub faces: Option<PathBuf>,
    /// Also solve the classic game on the certificate's target with up to
    /// this many cops, giving the upper bound `2c`.
    #[arg(long)]
    pub upper_cops: Option<usize>,
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    Subdivide,
    #[value(name = "square-minus-e")]
    SquareMinusE,
    LineGraph,
}

impl OpArg {
    fn as_str(self) -> &'static str {
        match self {
            OpArg::Subdivide => "subdivide",
            OpArg::SquareMinusE => "square-minus-e",
            OpArg::LineGraph => "line-graph",
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub op: OpArg,
    /// Graph file or `builtin:NAME`.
    #[arg(long = "in")]
    pub input: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format; defaults to the extension of `--out`.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Debug, Args)]
pub struct AuditArgs {
    /// graph6 file (one graph per line) or `small:N` for every connected graph
    /// on at most N vertices.
    #[arg(long)]
    pub corpus: String,
    #[arg(long)]
    pub max_cops: usize,
    #[arg(long)]
    pub budget: Option<u64>,
    /// Worker threads; output order follows the corpus either way.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Print only the totals.
    #[arg(long)]
    pub summary: bool,
}

/// Budget from the flag, else the environment, else the default.
pub fn resolve_budget(flag: Option<u64>) -> CliResult<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Input(format!("{BUDGET_ENV} is not a number: `{v}`"))),
        Err(_) => Ok(DEFAULT_BUDGET_STATES),
    }
}

pub fn solve(args: &SolveArgs) -> CliResult<SolveReport> {
    let g = load_graph(&args.graph)?;
    let opts = SolveOptions::with_budget(resolve_budget(args.budget)?);
    let kind: GameKind = args.game.into();
    let started = Instant::now();
    let result = match kind {
        GameKind::Classic => cop_number(&g, args.max_cops, &opts)?,
        GameKind::Attacking => attacking_cop_number(&g, args.max_cops, &opts)?,
    };
    let wall_ms = started.elapsed().as_millis() as u64;
    let placement = result.placement();

    if let Some(path) = &args.table {
        write_table(path, &result.table)?;
    }
    if let Some(path) = &args.trace {
        let cops = extract_strategy(&g, &result.table, Side::Cops);
        let robber = extract_strategy(&g, &result.table, Side::Robber);
        let trace = play(&g, kind, &cops, &robber, &placement.start(), args.max_rounds)?;
        let text = if Format::from_path(path) == Format::Dot { trace_dot(&g, &trace) } else { to_json(&trace_json(&trace)) };
        fs::write(path, text).map_err(|e| CliError::io(path, e))?;
    }

    Ok(SolveReport {
        schema: SCHEMA,
        graph: args.graph.clone(),
        game: kind.as_str(),
        max_cops: args.max_cops,
        value: result.value,
        winning_placement: result.value.map(|_| (&placement).into()),
        d0: result.value.and(placement.capture_in),
        states_explored: result.states_explored,
        wall_ms,
    })
}

pub fn certify(args: &CertifyArgs) -> CliResult<CertifyReport> {
    let g = load_graph(&args.graph)?;
    let mut report = CertifyReport::new(args.lemma.as_str(), &args.graph);
    match args.lemma {
        LemmaArg::Girth5 | LemmaArg::Subdivision | LemmaArg::Square => {
            let (cert, target) = match args.lemma {
                LemmaArg::Girth5 => (girth5_lower_bound(&g, args.gamma_budget), g.clone()),
                LemmaArg::Subdivision => (subdivision_lower_bound(&g, args.gamma_budget), subdivide_all_edges(&g)),
                _ => (square_lower_bound(&g, args.gamma_budget), square_minus_edges(&g)),
            };
            let Some(cert) = cert else {
                report.reason = Some("premises do not hold".into());
                return Ok(report);
            };
            cert.verify(&g)?;
            report.applies = true;
            report.certificate = Some((&cert).into());
            if let Some(k) = args.upper_cops {
                upper_bound(&mut report, &cert, &target, k, args.budget)?;
            }
        }
        LemmaArg::Cc2TriangleFree => match triangle_free_cc_at_most_2(&g) {
            Ok((value, record)) => {
                record.verify(&g)?;
                report.applies = true;
                report.value = Some(value);
                report.elimination = Some((&record).into());
            }
            Err(pursuit_core::Error::NotTriangleFree) => report.reason = Some("graph has a triangle".into()),
            Err(e) => return Err(e.into()),
        },
        LemmaArg::Cc1 => {
            report.applies = true;
            report.value = Some(cc_equals_one(&g)?);
        }
        LemmaArg::OuterplanarCc2 => {
            let path = args.faces.as_ref().ok_or_else(|| CliError::Input("--faces is required for outerplanar-cc2".into()))?;
            let faces = load_faces(path)?;
            match outerplanar_cc2_check(&g, &faces) {
                Ok(value) => {
                    report.applies = true;
                    report.value = Some(value);
                }
                Err(pursuit_core::Error::UniversalVertex) => report.reason = Some("graph has a universal vertex".into()),
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(report)
}

fn upper_bound(report: &mut CertifyReport, cert: &Certificate, target: &Graph, k: usize, budget: Option<u64>) -> CliResult<()> {
    let opts = SolveOptions::with_budget(resolve_budget(budget)?);
    let c = cop_number(target, k, &opts)?.value;
    let bound = c.map(|c| 2 * c);
    report.upper = Some(UpperJson { cop_number: c, bound });
    if bound == Some(cert.bound) {
        report.attacking_cop_number = Some(cert.bound);
    }
    Ok(())
}

fn load_faces(path: &Path) -> CliResult<EmbeddingFaces> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let mut faces = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let face = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|w| !w.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<usize>, _>>()
            .map_err(|_| CliError::Input(format!("{}:{}: expected vertex ids", path.display(), i + 1)))?;
        faces.push(face);
    }
    Ok(EmbeddingFaces::new(faces))
}

pub fn construct(args: &ConstructArgs) -> CliResult<ConstructReport> {
    let g = load_graph(&args.input)?;
    let out = match args.op {
        OpArg::Subdivide => subdivide_all_edges(&g),
        OpArg::SquareMinusE => square_minus_edges(&g),
        OpArg::LineGraph => line_graph(&g)?,
    };
    if let Some(path) = &args.out {
        let format = args.format.unwrap_or_else(|| Format::from_path(path));
        write_graph(&out, path, format)?;
    }
    let (min_degree, max_degree) = degree_stats(&out);
    Ok(ConstructReport {
        schema: SCHEMA,
        op: args.op.as_str(),
        input: args.input.clone(),
        output: args.out.as_ref().map(|p| p.display().to_string()),
        n: out.vertex_count(),
        m: out.edge_count(),
        girth: girth(&out).into(),
        min_degree,
        max_degree,
        bipartite: is_bipartite(&out),
    })
}

pub fn audit(args: &AuditArgs) -> CliResult<AuditReport> {
    let graphs = load_corpus(&args.corpus)?;
    let opts = SolveOptions::with_budget(resolve_budget(args.budget)?);
    let run = |(i, g): (usize, &Graph)| -> CliResult<AuditEntry> {
        let audit = bound_audit(g, args.max_cops, &opts)?;
        Ok(AuditEntry::new(i, encode_graph6(g), g.vertex_count(), g.edge_count(), &audit))
    };
    let results: Vec<CliResult<AuditEntry>> = match args.jobs {
        Some(1) => graphs.iter().enumerate().map(run).collect(),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::Input(e.to_string()))?
            .install(|| graphs.par_iter().enumerate().map(run).collect()),
        None => graphs.par_iter().enumerate().map(run).collect(),
    };
    let entries = results.into_iter().collect::<CliResult<Vec<_>>>()?;
    let violations = entries.iter().map(|e| e.violations.len()).sum();
    Ok(AuditReport {
        schema: SCHEMA,
        corpus: args.corpus.clone(),
        max_cops: args.max_cops,
        graphs: entries.len(),
        violations,
        entries: (!args.summary).then_some(entries),
    })
}

/// Runs a parsed command: the JSON to print and the exit code, or an error.
pub fn run(cli: &Cli) -> CliResult<(String, i32)> {
    match &cli.command {
        Command::Solve(a) => Ok((to_json(&solve(a)?), 0)),
        Command::Certify(a) => Ok((to_json(&certify(a)?), 0)),
        Command::Construct(a) => Ok((to_json(&construct(a)?), 0)),
        Command::Audit(a) => {
            let report = audit(a)?;
            let code = if report.violations > 0 { CliError::Violations(report.violations).exit_code() } else { 0 };
            Ok((to_json(&report), code))
        }
    }
}
