//! `recolor`: command-line access to mad computation, degree partitions,
//! recoloring walks, walk verification and the exhaustive oracle.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use recolor_core::coloring::parse_colors;
use recolor_core::density::DensityError;
use recolor_core::layering::{build_degree_partition, LayeringError, SpecialISParams};
use recolor_core::oracle::{OracleError, StateSpace, DEFAULT_STATE_CAP};
use recolor_core::recolor::{
    parse_steps, recolor_degenerate_pipeline, recolor_theorem_pipeline, steps_to_text,
    verify_sequence, RecolorError, VerifyError,
};
use recolor_core::{
    format_rational, mad_brute, mad_exact, parse_graph, parse_rational, Color, Coloring, Graph,
};

use report::RunReport;

const USAGE: u8 = 1;
const PARSE: u8 = 2;
const CAP: u8 = 3;
const SIZE_GUARANTEE: u8 = 4;
const IMPROPER: u8 = 5;
const PALETTE: u8 = 6;
const VIOLATION: u8 = 7;

#[derive(Debug, Parser)]
#[command(
    name = "recolor",
    version,
    about = "Recoloring walks between proper colorings of sparse graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the maximum average degree as p/q.
    Mad {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MadMode::Exact)]
        mode: MadMode,
    },
    /// Print a (d-1)-degree partition built by repeated special independent sets.
    Partition {
        graph: PathBuf,
        #[arg(short)]
        d: usize,
        /// Slack as an exact rational, e.g. 1/2.
        #[arg(long)]
        epsilon: String,
    },
    /// Compute a recoloring walk between two colorings.
    Recolor(RecolorArgs),
    /// Replay a walk and report the final coloring.
    Verify {
        graph: PathBuf,
        from: PathBuf,
        sequence: PathBuf,
        #[arg(short)]
        k: Color,
    },
    /// Exact answers by exhaustive search over all k-colorings.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MadMode {
    Exact,
    Brute,
}

#[derive(Debug, Args)]
struct RecolorArgs {
    graph: PathBuf,
    from: PathBuf,
    to: PathBuf,
    #[arg(short)]
    k: Color,
    #[arg(short, required_unless_present = "degenerate_fallback")]
    d: Option<usize>,
    #[arg(long, required_unless_present = "degenerate_fallback")]
    epsilon: Option<String>,
    /// Use singleton layers from a degeneracy ordering instead (k >= degeneracy + 2).
    #[arg(long)]
    degenerate_fallback: bool,
    /// Write per-vertex counts as JSON.
    #[arg(long, value_name = "PATH")]
    stats: Option<PathBuf>,
    /// Write the sequence here and print only its length.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Write a JSON run report with input digests.
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    graph: PathBuf,
    #[arg(short)]
    k: Color,
    #[command(flatten)]
    query: Query,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Query {
    #[arg(long)]
    diameter: bool,
    #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
    distance: Option<Vec<PathBuf>>,
    #[arg(long)]
    count: bool,
}

/// A message for stderr and the process exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Self {
            code,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(USAGE, format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|e| Failure::new(USAGE, format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<(Graph, String), Failure> {
    let text = read(path)?;
    let g =
        parse_graph(&text).map_err(|e| Failure::new(PARSE, format!("{}: {e}", path.display())))?;
    Ok((g, text))
}

fn load_coloring(path: &Path, g: &Graph, k: Color) -> Result<(Coloring, String), Failure> {
    let text = read(path)?;
    let colors =
        parse_colors(&text).map_err(|e| Failure::new(PARSE, format!("{}: {e}", path.display())))?;
    if colors.len() != g.n() {
        return Err(Failure::new(
            IMPROPER,
            format!(
                "{}: {} colors for {} vertices",
                path.display(),
                colors.len(),
                g.n()
            ),
        ));
    }
    let c = Coloring::new(colors, k)
        .map_err(|e| Failure::new(IMPROPER, format!("{}: {e}", path.display())))?;
    Ok((c, text))
}

fn params(d: usize, epsilon: &str) -> Result<SpecialISParams, Failure> {
    let eps = parse_rational(epsilon).map_err(|e| Failure::new(USAGE, e))?;
    SpecialISParams::new(d, eps).map_err(|e| Failure::new(USAGE, e))
}

fn layering_failure(e: LayeringError) -> Failure {
    match e {
        LayeringError::SizeGuaranteeViolated { .. } => Failure::new(SIZE_GUARANTEE, e),
        LayeringError::InvalidParams(_) => Failure::new(USAGE, e),
    }
}

fn recolor_failure(e: RecolorError) -> Failure {
    match e {
        RecolorError::ImproperInput { .. } => Failure::new(IMPROPER, e),
        RecolorError::PaletteTooSmall { .. } => Failure::new(PALETTE, e),
        RecolorError::Layering(inner @ LayeringError::SizeGuaranteeViolated { .. }) => {
            Failure::new(
                SIZE_GUARANTEE,
                format!(
                    "{inner}; --degenerate-fallback accepts any graph with k >= degeneracy + 2"
                ),
            )
        }
        RecolorError::Layering(inner) => layering_failure(inner),
        other => Failure::new(USAGE, other),
    }
}

fn oracle_failure(e: OracleError) -> Failure {
    match e {
        OracleError::StateSpaceTooLarge { .. } => Failure::new(CAP, e),
        OracleError::ImproperInput(_) => Failure::new(IMPROPER, e),
        OracleError::TooManyVertices { .. } => Failure::new(CAP, e),
    }
}

fn cmd_mad(graph: &Path, mode: MadMode) -> Outcome {
    let (g, _) = load_graph(graph)?;
    let mad = match mode {
        MadMode::Exact => mad_exact(&g),
        MadMode::Brute => mad_brute(&g)
            .map_err(|e @ DensityError::TooManyVertices { .. }| Failure::new(CAP, e))?,
    };
    println!("{}", format_rational(&mad));
    Ok(())
}

fn cmd_partition(graph: &Path, d: usize, epsilon: &str) -> Outcome {
    let (g, _) = load_graph(graph)?;
    let params = params(d, epsilon)?;
    let p = build_degree_partition(&g, &params).map_err(layering_failure)?;
    print!("{}", p.to_text());
    Ok(())
}

fn cmd_recolor(args: &RecolorArgs) -> Outcome {
    let (g, graph_text) = load_graph(&args.graph)?;
    let (alpha, from_text) = load_coloring(&args.from, &g, args.k)?;
    let (beta, to_text) = load_coloring(&args.to, &g, args.k)?;
    let out = if args.degenerate_fallback {
        recolor_degenerate_pipeline(&g, &alpha, &beta, args.k)
    } else {
        let (d, eps) = (
            args.d.unwrap_or_default(),
            args.epsilon.as_deref().unwrap_or_default(),
        );
        let params = params(d, eps)?;
        recolor_theorem_pipeline(&g, &params, &alpha, &beta, args.k)
    }
    .map_err(recolor_failure)?;

    let sequence = steps_to_text(&out.sequence.steps);
    let stats = out.stats_report();
    if let Some(path) = &args.stats {
        let json = serde_json::to_string_pretty(&stats).expect("stats serialize");
        write(path, &format!("{json}\n"))?;
    }
    if let Some(path) = &args.report {
        let report = RunReport::new(
            std::env::args().skip(1).collect(),
            [&graph_text, &from_text, &to_text],
            &stats,
            format_rational(&mad_exact(&g)),
        );
        write(path, &report.to_json())?;
    }
    match &args.out {
        Some(path) => {
            write(path, &sequence)?;
            println!("{}", out.sequence.len());
        }
        None => print!("{sequence}"),
    }
    Ok(())
}

fn cmd_verify(graph: &Path, from: &Path, sequence: &Path, k: Color) -> Outcome {
    let (g, _) = load_graph(graph)?;
    let (alpha, _) = load_coloring(from, &g, k)?;
    let steps = parse_steps(&read(sequence)?)
        .map_err(|e| Failure::new(PARSE, format!("{}: {e}", sequence.display())))?;
    match verify_sequence(&g, &alpha, &steps, k) {
        Ok(end) => {
            println!("OK final={end}");
            Ok(())
        }
        Err(e @ VerifyError::Step { .. }) => Err(Failure::new(VIOLATION, e)),
        Err(e) => Err(Failure::new(IMPROPER, e)),
    }
}

fn state_cap() -> Result<u64, Failure> {
    match std::env::var("RECOLOR_STATE_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::new(USAGE, format!("RECOLOR_STATE_CAP={v:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_STATE_CAP),
    }
}

fn cmd_oracle(args: &OracleArgs) -> Outcome {
    let (g, _) = load_graph(&args.graph)?;
    let space = StateSpace::new(&g, args.k, state_cap()?).map_err(oracle_failure)?;
    let show = |d: Option<usize>| d.map_or("disconnected".to_string(), |d| d.to_string());
    if args.query.count {
        println!("{}", space.count_proper());
    } else if args.query.diameter {
        println!("{}", show(space.exact_diameter()));
    } else if let Some(paths) = &args.query.distance {
        let parse = |p: &Path| -> Result<Vec<Color>, Failure> {
            parse_colors(&read(p)?)
                .map_err(|e| Failure::new(PARSE, format!("{}: {e}", p.display())))
        };
        let (a, b) = (parse(&paths[0])?, parse(&paths[1])?);
        let d = space.bfs_distance(&a, &b).map_err(oracle_failure)?;
        println!("{}", show(d));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match &cli.command {
        Command::Mad { graph, mode } => cmd_mad(graph, *mode),
        Command::Partition { graph, d, epsilon } => cmd_partition(graph, *d, epsilon),
        Command::Recolor(args) => cmd_recolor(args),
        Command::Verify {
            graph,
            from,
            sequence,
            k,
        } => cmd_verify(graph, from, sequence, *k),
        Command::Oracle(args) => cmd_oracle(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("recolor: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
