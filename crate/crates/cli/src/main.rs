//! `randic-lab`: compute Randić-type indices on edge-list files, sample
//! inhomogeneous random graphs, evaluate limit formulas, and run seeded
//! convergence studies.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use randic_core::{
    converge_study, dense_enough, general_randic, general_sum_connectivity, harmonic, index_suite,
    limit_closed, limit_exact, parse_edge_list, parse_matrix_csv, sample_with, sparsity_bound,
    summarize_network, table_csv, table_text, write_edge_list, EdgeListDocument, Graph,
    IndexFamily, IndexSpec, Kernel, KernelDescriptor, LimitMode, NetworkSummary,
};

#[derive(Parser)]
#[command(
    name = "randic-lab",
    version,
    about = "Degree-based graph indices, random-graph sampling, and their limits",
    after_help = "Set RANDIC_LAB_THREADS=k to cap worker threads (0 or unset = auto)."
)]
struct Cli {
    /// Output format for results on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Suppress warnings and progress notes on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute indices of a graph read from an edge-list file.
    Compute(ComputeArgs),
    /// Sample a random graph and write it as an edge list.
    Generate(GenerateArgs),
    /// Evaluate a theoretical limit (exact finite-n sum or closed form).
    Limit(LimitArgs),
    /// Monte Carlo convergence study of index/limit ratios.
    Converge(ConvergeArgs),
    /// Summary-table row for a graph: size, density, degree stats, indices.
    Summarize(SummarizeArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Edge-list file (one "u v" pair per line; '#' comments ignored).
    #[arg(long)]
    input: PathBuf,
    /// Index family; requires --alpha.
    #[arg(long, value_enum, requires = "alpha", conflicts_with_all = ["preset", "all_table1"])]
    family: Option<FamilyArg>,
    /// Real exponent for --family.
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Named index shortcut.
    #[arg(long, value_enum, conflicts_with = "all_table1")]
    preset: Option<Preset>,
    /// All four summary-table indices: randic(-1/2), randic(-1), chi(-1/2), chi(-1).
    #[arg(long)]
    all_table1: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Randic,
    Chi,
}

impl From<FamilyArg> for IndexFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Randic => IndexFamily::Randic,
            FamilyArg::Chi => IndexFamily::Chi,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    /// Randić index R_{-1/2}.
    RandicHalf,
    /// Modified second Zagreb index R_{-1}.
    Zagreb,
    /// Harmonic index 2 chi_{-1}.
    Harmonic,
    /// Sum-connectivity index chi_{-1/2}.
    ChiHalf,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    n: usize,
    /// Edge-scale probability in [0, 1].
    #[arg(long)]
    p: f64,
    /// constant | exp:KAPPA | matrix:FILE.csv
    #[arg(long, default_value = "constant")]
    kernel: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output edge-list path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct LimitArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    /// constant | exp:KAPPA | matrix:FILE.csv
    #[arg(long, default_value = "constant")]
    kernel: String,
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    /// exact: finite-n leading-term sum; closed: asymptotic formula.
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Closed,
}

#[derive(Args)]
struct ConvergeArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    /// constant | exp:KAPPA | matrix:FILE.csv
    #[arg(long, default_value = "constant")]
    kernel: String,
    /// Comma-separated node counts, e.g. 250,500,1000.
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    /// Edge-scale probability applied at every grid point.
    #[arg(long)]
    p: f64,
    /// Replicates per grid point (at least 2).
    #[arg(long, default_value_t = 20)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SummarizeArgs {
    #[arg(long)]
    input: PathBuf,
    /// Row label; defaults to the file stem.
    #[arg(long)]
    name: Option<String>,
}

fn main() -> ExitCode {
    randic_core::threads::init_thread_pool_from_env();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(args) => run_compute(&cli, args),
        Command::Generate(args) => run_generate(&cli, args),
        Command::Limit(args) => run_limit(&cli, args),
        Command::Converge(args) => run_converge(&cli, args),
        Command::Summarize(args) => run_summarize(&cli, args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn parse_kernel(arg: &str) -> Result<Kernel> {
    if arg == "constant" {
        return Ok(Kernel::constant());
    }
    if let Some(kappa) = arg.strip_prefix("exp:") {
        let kappa: f64 = kappa.parse().with_context(|| format!("bad kappa {kappa:?}"))?;
        return Ok(Kernel::exponential(kappa)?);
    }
    if let Some(path) = arg.strip_prefix("matrix:") {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading kernel matrix {path}"))?;
        return Ok(parse_matrix_csv(&text)?);
    }
    bail!("unknown kernel {arg:?}; expected constant, exp:KAPPA, or matrix:FILE");
}

fn load_graph(cli: &Cli, path: &Path) -> Result<(Graph, EdgeListDocument)> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let (graph, doc) = parse_edge_list(&text)?;
    if !cli.quiet {
        if doc.self_loops_dropped + doc.duplicates_collapsed > 0 {
            eprintln!(
                "note: dropped {} self-loop(s), collapsed {} duplicate edge(s)",
                doc.self_loops_dropped, doc.duplicates_collapsed
            );
        }
        if doc.empty {
            eprintln!("warning: {} contains no edges", path.display());
        }
    }
    Ok((graph, doc))
}

#[derive(Serialize)]
struct IndexRow {
    label: String,
    family: IndexFamily,
    alpha: f64,
    value: f64,
}

#[derive(Serialize)]
struct ComputePayload {
    input: String,
    n: usize,
    edge_count: usize,
    self_loops_dropped: usize,
    duplicates_collapsed: usize,
    indices: Vec<IndexRow>,
}

fn run_compute(cli: &Cli, args: &ComputeArgs) -> Result<()> {
    let (graph, doc) = load_graph(cli, &args.input)?;
    let mut rows = Vec::new();
    if args.all_table1 {
        for v in index_suite(&graph, &randic_core::SUMMARY_SPECS) {
            rows.push(IndexRow {
                label: format!("{}({})", v.spec.family.name(), v.spec.alpha),
                family: v.spec.family,
                alpha: v.spec.alpha,
                value: v.value,
            });
        }
    } else if let Some(preset) = args.preset {
        let (label, value) = match preset {
            Preset::RandicHalf => ("randic-half", general_randic(&graph, -0.5)),
            Preset::Zagreb => ("zagreb", general_randic(&graph, -1.0)),
            Preset::Harmonic => ("harmonic", harmonic(&graph)),
            Preset::ChiHalf => ("chi-half", general_sum_connectivity(&graph, -0.5)),
        };
        rows.push(IndexRow {
            label: label.to_string(),
            family: value.spec.family,
            alpha: value.spec.alpha,
            value: value.value,
        });
    } else if let (Some(family), Some(alpha)) = (args.family, args.alpha) {
        let spec = IndexSpec { family: family.into(), alpha };
        let v = match spec.family {
            IndexFamily::Randic => general_randic(&graph, alpha),
            IndexFamily::Chi => general_sum_connectivity(&graph, alpha),
        };
        rows.push(IndexRow {
            label: format!("{}({})", spec.family.name(), spec.alpha),
            family: spec.family,
            alpha: spec.alpha,
            value: v.value,
        });
    } else {
        bail!("select an index: --family F --alpha A, --preset NAME, or --all-table1");
    }

    let payload = ComputePayload {
        input: args.input.display().to_string(),
        n: graph.node_count(),
        edge_count: graph.edge_count(),
        self_loops_dropped: doc.self_loops_dropped,
        duplicates_collapsed: doc.duplicates_collapsed,
        indices: rows,
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&payload)?),
        Format::Csv => {
            println!("label,family,alpha,value");
            for r in &payload.indices {
                println!("{},{},{},{}", r.label, r.family.name(), r.alpha, r.value);
            }
        }
        Format::Text => {
            for r in &payload.indices {
                println!("{} = {:.6}", r.label, r.value);
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct GeneratePayload {
    n: usize,
    p: f64,
    kernel: KernelDescriptor,
    seed: u64,
    edge_count: usize,
    out: String,
}

fn run_generate(cli: &Cli, args: &GenerateArgs) -> Result<()> {
    let kernel = parse_kernel(&args.kernel)?;
    let graph = sample_with(args.n, args.p, &kernel, args.seed)?;
    std::fs::write(&args.out, write_edge_list(&graph))
        .with_context(|| format!("writing {}", args.out.display()))?;
    let payload = GeneratePayload {
        n: args.n,
        p: args.p,
        kernel: kernel.descriptor(),
        seed: args.seed,
        edge_count: graph.edge_count(),
        out: args.out.display().to_string(),
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&payload)?),
        Format::Csv => {
            println!("n,p,seed,edge_count,out");
            println!(
                "{},{},{},{},{}",
                payload.n, payload.p, payload.seed, payload.edge_count, payload.out
            );
        }
        Format::Text => {
            if !cli.quiet {
                println!(
                    "wrote n={} edges={} (seed {}) -> {}",
                    payload.n, payload.edge_count, payload.seed, payload.out
                );
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct LimitPayload {
    n: usize,
    p: f64,
    kernel: KernelDescriptor,
    family: IndexFamily,
    alpha: f64,
    mode: LimitMode,
    value: f64,
}

fn run_limit(cli: &Cli, args: &LimitArgs) -> Result<()> {
    let kernel = parse_kernel(&args.kernel)?;
    let spec = IndexSpec { family: args.family.into(), alpha: args.alpha };
    let result = match args.mode {
        ModeArg::Exact => limit_exact(args.n, args.p, &kernel, spec)?,
        ModeArg::Closed => limit_closed(args.n, args.p, &kernel, spec)?,
    };
    let payload = LimitPayload {
        n: result.n,
        p: result.p,
        kernel: result.kernel,
        family: spec.family,
        alpha: spec.alpha,
        mode: result.mode,
        value: result.value,
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&payload)?),
        Format::Csv => {
            println!("n,p,family,alpha,mode,value");
            println!(
                "{},{},{},{},{:?},{}",
                payload.n,
                payload.p,
                payload.family.name(),
                payload.alpha,
                payload.mode,
                payload.value
            );
        }
        Format::Text => println!(
            "{}({}) {} limit at n={} p={}: {:.6}",
            payload.family.name(),
            payload.alpha,
            match payload.mode {
                LimitMode::ExactSum => "exact-sum",
                LimitMode::ClosedForm => "closed-form",
            },
            payload.n,
            payload.p,
            payload.value
        ),
    }
    Ok(())
}

fn run_converge(cli: &Cli, args: &ConvergeArgs) -> Result<()> {
    let kernel = parse_kernel(&args.kernel)?;
    // surface the density bound before running anything expensive
    for &n in &args.n_list {
        if !dense_enough(n, args.p) {
            bail!(
                "density hypothesis violated at n={n}: need p >= log(n)/(n log 2) = {:.6}, got p = {}",
                sparsity_bound(n)?,
                args.p
            );
        }
    }
    let spec = IndexSpec { family: args.family.into(), alpha: args.alpha };
    let grid: Vec<(usize, f64)> = args.n_list.iter().map(|&n| (n, args.p)).collect();
    let report = converge_study(spec, &kernel, &grid, args.reps, args.seed)?;
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "{}({}) vs exact-sum limit, {} replicates, seed {}",
                spec.family.name(), spec.alpha, report.replicates, report.master_seed)?;
            writeln!(out, "{:>6} {:>8} {:>14} {:>12} {:>12}", "n", "p", "limit", "mean_ratio", "std_dev")?;
            for pt in &report.points {
                writeln!(
                    out,
                    "{:>6} {:>8} {:>14.6} {:>12.6} {:>12.6}",
                    pt.n, pt.p, pt.limit, pt.mean_ratio, pt.std_dev
                )?;
            }
            match report.rate_estimate {
                Some(rate) => writeln!(out, "rate estimate (slope of log|mean-1| vs log(np)): {rate:.4}")?,
                None => writeln!(out, "rate estimate: not available (fewer than 2 usable points)")?,
            }
            print!("{out}");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SummarizePayload {
    #[serde(flatten)]
    summary: NetworkSummary,
}

fn run_summarize(cli: &Cli, args: &SummarizeArgs) -> Result<()> {
    let (graph, doc) = load_graph(cli, &args.input)?;
    let name = args.name.clone().unwrap_or_else(|| {
        args.input.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
    });
    let summary = summarize_network(&name, &graph, doc.diagnostics());
    match cli.format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&SummarizePayload { summary })?)
        }
        Format::Csv => print!("{}", table_csv(std::slice::from_ref(&summary))),
        Format::Text => print!("{}", table_text(std::slice::from_ref(&summary))),
    }
    Ok(())
}
