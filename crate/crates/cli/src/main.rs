//! Batch front end: compute index reports, build family members, apply
//! transformations, stream enumerations, and run the verification suite.
//! Outputs are deterministic for a fixed invocation regardless of the
//! worker-pool size.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use eccx_core::enumerate::{all_connected_graphs, all_trees, filtered, FilterSpec};
use eccx_core::families::FamilySpec;
use eccx_core::invariants::index_report;
use eccx_core::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use eccx_core::transforms::{
    iterate_spine_shift, iterate_star_ward, merge_paths_delta, shift_leaves_toward_spine,
    star_ward_shift, TransformTrace,
};
use eccx_core::verify::{
    graph_verdicts, run_suite, SuiteConfig, TheoremId, TheoremVerdict, Universe,
};
use eccx_core::{Graph, IndexReport};

#[derive(Parser)]
#[command(
    name = "eccx",
    version,
    about = "Eccentricity-based graph indices: compute, build, transform, enumerate, verify"
)]
struct Cli {
    /// Worker threads (default: ECCX_JOBS, then all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the index report of each input graph
    Compute(ComputeArgs),
    /// Build one member of a named graph family
    Family(FamilyArgs),
    /// Apply a transformation and print its trace as JSON
    Transform(TransformArgs),
    /// Stream every tree or connected graph of one order, graph6 per line
    Enumerate(EnumerateArgs),
    /// Check bounds over an enumerated universe; nonzero exit on failure
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    /// Input path, or '-' for standard input
    #[arg(long, default_value = "-")]
    input: String,
    /// Input serialization (graph6 is one graph per line)
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
    /// Report serialization
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    output: ReportFormat,
    /// Output path (default: standard output)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FamilyArgs {
    /// Output serialization
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
    /// Output path (default: standard output)
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    kind: FamilyKind,
}

#[derive(Subcommand)]
enum FamilyKind {
    /// Path on n vertices
    Path { n: usize },
    /// Star on n vertices
    Star { n: usize },
    /// Complete graph on n vertices
    Complete { n: usize },
    /// Cycle on n vertices
    Cycle { n: usize },
    /// Cocktail-party graph on 2k vertices
    CocktailParty { k: usize },
    /// Join of the cocktail-party graph on 2k vertices with a complete
    /// graph on n-2k vertices
    CpJoinComplete { k: usize, n: usize },
    /// Caterpillar: spine path with the given leaf count per spine vertex
    Caterpillar { leaf_counts: Vec<usize> },
    /// Two pendant paths of lengths p and q glued at one vertex
    PendantPaths { p: usize, q: usize },
}

#[derive(Args)]
struct TransformArgs {
    #[command(subcommand)]
    op: TransformOp,
}

#[derive(Args)]
struct TransformInput {
    /// Input path, or '-' for standard input (a single graph)
    #[arg(long, default_value = "-")]
    input: String,
    /// Input serialization
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
    /// Output path (default: standard output)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TransformOp {
    /// Move all leaves of a donor vertex one step toward the spine
    ShiftLeaves {
        #[command(flatten)]
        io: TransformInput,
        #[arg(long)]
        donor: usize,
        #[arg(long)]
        receiver: usize,
    },
    /// Repeat spine shifts until the tree is a caterpillar
    ShiftLeavesAll {
        #[command(flatten)]
        io: TransformInput,
    },
    /// Move every neighbor of one vertex except the chosen one onto it
    StarWard {
        #[command(flatten)]
        io: TransformInput,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Repeat star-ward shifts until the tree is a star
    StarWardAll {
        #[command(flatten)]
        io: TransformInput,
    },
    /// Compare one pendant path of length p+q at a vertex against the
    /// split into lengths p and q
    MergePaths {
        #[command(flatten)]
        io: TransformInput,
        #[arg(long)]
        attach: usize,
        #[arg(short, long)]
        p: usize,
        #[arg(short, long)]
        q: usize,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(subcommand)]
    universe: EnumerateUniverse,
}

#[derive(Subcommand)]
enum EnumerateUniverse {
    /// Trees, n up to 16
    Trees(EnumerateParams),
    /// Connected graphs, n up to 8
    Graphs(EnumerateParams),
}

#[derive(Args)]
struct EnumerateParams {
    /// Number of vertices
    #[arg(long)]
    n: usize,
    /// Keep only graphs with this diameter
    #[arg(long)]
    diameter: Option<u16>,
    /// Keep only graphs with this radius
    #[arg(long)]
    radius: Option<u16>,
    /// Keep only graphs with this maximum degree or less
    #[arg(long)]
    max_degree: Option<usize>,
    /// Print the number of graphs instead of the graphs
    #[arg(long)]
    count: bool,
    /// Output path (default: standard output)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UniverseArg {
    Trees,
    Graphs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem id (comma-separated list allowed) or 'all'
    #[arg(long, default_value = "all")]
    theorem: String,
    #[arg(long, value_enum)]
    universe: UniverseArg,
    /// Number of vertices
    #[arg(long)]
    n: usize,
    /// Restrict the universe to this diameter
    #[arg(long)]
    diameter: Option<u16>,
    /// Cap on p+q for the pendant-path bounds
    #[arg(long, default_value_t = 5)]
    pq_cap: usize,
    /// Also write every per-graph verdict as CSV to this path
    #[arg(long)]
    report: Option<PathBuf>,
    /// Summary output path (default: standard output)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    configure_pool(cli.jobs)?;
    match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Family(args) => cmd_family(args),
        Command::Transform(args) => cmd_transform(args.op),
        Command::Enumerate(args) => cmd_enumerate(args.universe),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn configure_pool(jobs: Option<usize>) -> Result<()> {
    let jobs = match jobs {
        Some(j) => Some(j),
        None => std::env::var("ECCX_JOBS")
            .ok()
            .map(|s| {
                s.parse::<usize>()
                    .with_context(|| format!("ECCX_JOBS must be a positive integer, got '{s}'"))
            })
            .transpose()?,
    };
    if let Some(j) = jobs {
        if j == 0 {
            bail!("worker count must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .context("initialize worker pool")?;
    }
    Ok(())
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("read standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("read {path}"))
    }
}

fn parse_graphs(text: &str, format: GraphFormat) -> Result<Vec<Graph>> {
    match format {
        GraphFormat::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty())
            .map(|line| parse_graph6(line).with_context(|| format!("parse '{line}'")))
            .collect(),
        GraphFormat::Edgelist => Ok(vec![parse_edge_list(text)?]),
    }
}

fn parse_single(path: &str, format: GraphFormat) -> Result<Graph> {
    let graphs = parse_graphs(&read_input(path)?, format)?;
    match graphs.len() {
        1 => Ok(graphs.into_iter().next().unwrap()),
        k => bail!("expected exactly one input graph, got {k}"),
    }
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(
            fs::File::create(p).with_context(|| format!("create {}", p.display()))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout())),
    })
}

fn emit_graph(w: &mut dyn Write, g: &Graph, format: GraphFormat) -> Result<()> {
    match format {
        GraphFormat::Graph6 => writeln!(w, "{}", emit_graph6(g)?)?,
        GraphFormat::Edgelist => write!(w, "{}", emit_edge_list(g))?,
    }
    Ok(())
}

fn cmd_compute(args: ComputeArgs) -> Result<ExitCode> {
    let graphs = parse_graphs(&read_input(&args.input)?, args.format)?;
    let reports: Vec<IndexReport> = graphs.iter().map(index_report).collect();
    let mut w = open_out(&args.out)?;
    match args.output {
        ReportFormat::Csv => {
            writeln!(w, "{}", IndexReport::CSV_HEADER)?;
            for r in &reports {
                writeln!(w, "{}", r.csv_row())?;
            }
        }
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut w, &reports)?;
            writeln!(w)?;
        }
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_family(args: FamilyArgs) -> Result<ExitCode> {
    let spec = match args.kind {
        FamilyKind::Path { n } => FamilySpec::Path { n },
        FamilyKind::Star { n } => FamilySpec::Star { n },
        FamilyKind::Complete { n } => FamilySpec::Complete { n },
        FamilyKind::Cycle { n } => FamilySpec::Cycle { n },
        FamilyKind::CocktailParty { k } => FamilySpec::CocktailParty { k },
        FamilyKind::CpJoinComplete { k, n } => FamilySpec::CpJoinComplete { k, n },
        FamilyKind::Caterpillar { leaf_counts } => FamilySpec::Caterpillar { leaf_counts },
        FamilyKind::PendantPaths { p, q } => FamilySpec::PendantPathGraph { p, q },
    };
    let g = spec.build()?;
    let mut w = open_out(&args.out)?;
    emit_graph(w.as_mut(), &g, args.format)?;
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn write_trace_result(
    io_args: &TransformInput,
    trace: &TransformTrace,
    result: &Graph,
) -> Result<()> {
    let mut w = open_out(&io_args.out)?;
    let payload = serde_json::json!({
        "trace": trace,
        "result": emit_graph6(result)?,
    });
    serde_json::to_writer_pretty(&mut w, &payload)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn write_trace_sequence(
    io_args: &TransformInput,
    steps: &[TransformTrace],
    result: &Graph,
) -> Result<()> {
    let mut w = open_out(&io_args.out)?;
    let payload = serde_json::json!({
        "steps": steps,
        "result": emit_graph6(result)?,
    });
    serde_json::to_writer_pretty(&mut w, &payload)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn cmd_transform(op: TransformOp) -> Result<ExitCode> {
    match op {
        TransformOp::ShiftLeaves {
            io,
            donor,
            receiver,
        } => {
            let g = parse_single(&io.input, io.format)?;
            let (result, trace) = shift_leaves_toward_spine(&g, donor, receiver)?;
            write_trace_result(&io, &trace, &result)?;
        }
        TransformOp::ShiftLeavesAll { io } => {
            let g = parse_single(&io.input, io.format)?;
            let (steps, result) = iterate_spine_shift(&g)?;
            write_trace_sequence(&io, &steps, &result)?;
        }
        TransformOp::StarWard { io, from, to } => {
            let g = parse_single(&io.input, io.format)?;
            let (result, trace) = star_ward_shift(&g, from, to)?;
            write_trace_result(&io, &trace, &result)?;
        }
        TransformOp::StarWardAll { io } => {
            let g = parse_single(&io.input, io.format)?;
            let (steps, result) = iterate_star_ward(&g)?;
            write_trace_sequence(&io, &steps, &result)?;
        }
        TransformOp::MergePaths { io, attach, p, q } => {
            let g = parse_single(&io.input, io.format)?;
            let bounds = merge_paths_delta(&g, attach, p, q)?;
            let mut w = open_out(&io.out)?;
            serde_json::to_writer_pretty(&mut w, &bounds)?;
            writeln!(w)?;
            w.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(universe: EnumerateUniverse) -> Result<ExitCode> {
    let (params, stream): (&EnumerateParams, Box<dyn Iterator<Item = Graph>>) = match &universe {
        EnumerateUniverse::Trees(p) => (p, Box::new(all_trees(p.n)?)),
        EnumerateUniverse::Graphs(p) => (p, Box::new(all_connected_graphs(p.n)?)),
    };
    let spec = FilterSpec {
        diameter: params.diameter,
        radius: params.radius,
        max_degree: params.max_degree,
    };
    let mut w = open_out(&params.out)?;
    if params.count {
        writeln!(w, "{}", filtered(stream, spec).count())?;
    } else {
        for g in filtered(stream, spec) {
            writeln!(w, "{}", emit_graph6(&g)?)?;
        }
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn parse_theorems(arg: &str) -> Result<Vec<TheoremId>> {
    if arg == "all" {
        return Ok(TheoremId::ALL.to_vec());
    }
    arg.split(',')
        .map(|s| s.trim().parse::<TheoremId>().map_err(anyhow::Error::msg))
        .collect()
}

fn verdict_csv_row(v: &TheoremVerdict) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        v.theorem_id,
        v.graph_id,
        v.lhs,
        v.rhs,
        v.slack,
        v.equality,
        v.characterization_expected,
        v.characterization_ok
    )
}

fn write_verdict_report(path: &PathBuf, cfg: &SuiteConfig) -> Result<()> {
    let graphs: Vec<Graph> = match cfg.universe {
        Universe::Trees => all_trees(cfg.n)?.collect(),
        Universe::Graphs => all_connected_graphs(cfg.n)?.collect(),
    };
    let mut w = io::BufWriter::new(
        fs::File::create(path).with_context(|| format!("create {}", path.display()))?,
    );
    writeln!(
        w,
        "theorem,graph,lhs,rhs,slack,equality,characterization_expected,characterization_ok"
    )?;
    for g in &graphs {
        if cfg
            .diameter
            .is_some_and(|d| g.distance_profile().diameter() != d)
        {
            continue;
        }
        let (verdicts, _) = graph_verdicts(g, cfg)?;
        for v in &verdicts {
            writeln!(w, "{}", verdict_csv_row(v))?;
        }
    }
    w.flush()?;
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let cfg = SuiteConfig {
        universe: match args.universe {
            UniverseArg::Trees => Universe::Trees,
            UniverseArg::Graphs => Universe::Graphs,
        },
        n: args.n,
        theorems: parse_theorems(&args.theorem)?,
        diameter: args.diameter,
        pend_path_cap: args.pq_cap,
    };
    let summary = run_suite(&cfg)?;
    if let Some(path) = &args.report {
        write_verdict_report(path, &cfg)?;
    }
    let mut w = open_out(&args.out)?;
    serde_json::to_writer_pretty(&mut w, &summary)?;
    writeln!(w)?;
    w.flush()?;
    Ok(if summary.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}
