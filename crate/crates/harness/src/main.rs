use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use qtanner_core::complex::VertexClass;
use qtanner_core::decoder::Decoder;
use qtanner_core::gf2::{BitVector, SparseBitMatrix};
use qtanner_core::lifted::{qtanner_from_lp, LpInstance};
use qtanner_core::qtanner::QuantumTannerCode;
use qtanner_harness::bench::{bench_linear_scaling, BenchFamily};
use qtanner_harness::certify::certify;
use qtanner_harness::config::{parse_code, ExperimentConfig};
use qtanner_harness::experiment::{run_on, write_report};
use qtanner_harness::instance::build_instance;
use qtanner_harness::schema::validate_report_dir;
use serde::Serialize;

/// Quantum Tanner code construction, decoding and experiments.
#[derive(Parser)]
#[command(name = "qtanner", version)]
struct Cli {
    /// Overrides the seed of the config or subcommand.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output directory.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an instance and export its check matrices and metadata.
    Build(BuildArgs),
    /// Decode one syndrome.
    Decode(DecodeArgs),
    /// Run a config-driven sweep and write JSONL records plus a CSV summary.
    Experiment(ExperimentArgs),
    /// Measure decode time over cyclic groups of growing order.
    Bench(BenchArgs),
    /// Robustness and puncture-resistance report for a code pair.
    Certify(CertifyArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Experiment config whose `instance` table is built.
    #[arg(long, conflicts_with = "lp", required_unless_present = "lp")]
    config: Option<PathBuf>,
    /// Lifted product instance as JSON.
    #[arg(long)]
    lp: Option<PathBuf>,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long)]
    config: PathBuf,
    /// File holding the syndrome as a 0/1 string.
    #[arg(long, conflicts_with = "error", required_unless_present = "error")]
    syndrome: Option<PathBuf>,
    /// File holding an error as a 0/1 string; its syndrome is decoded.
    #[arg(long)]
    error: Option<PathBuf>,
    /// Also write the step log as JSON lines.
    #[arg(long)]
    step_log: bool,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long)]
    config: PathBuf,
    /// Fail unless every trial decodes to an equivalent error.
    #[arg(long)]
    require_success: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = vec![6usize, 12, 24, 48])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 20)]
    reps: usize,
    /// Error weight is `⌈rate · n⌉`.
    #[arg(long, default_value_t = 0.01)]
    rate: f64,
    /// Fail if the fitted log-log slope exceeds this.
    #[arg(long)]
    max_slope: Option<f64>,
}

#[derive(Args)]
struct CertifyArgs {
    /// Code description such as `repetition:4` or `gen:1100,0011`.
    #[arg(long)]
    ca: String,
    #[arg(long)]
    cb: String,
    #[arg(long)]
    w: usize,
    #[arg(long, default_value_t = 0)]
    p: usize,
    /// Sample this many low-weight codewords instead of enumerating.
    #[arg(long)]
    samples: Option<usize>,
}

#[derive(Serialize)]
struct ComplexExport {
    group: String,
    group_order: usize,
    a: Vec<usize>,
    b: Vec<usize>,
    delta: usize,
    vertices: usize,
    /// Corner vertex ids `[v00, v01, v10, v11]` of each square.
    squares: Vec<[usize; 4]>,
}

fn complex_export(q: &QuantumTannerCode) -> ComplexExport {
    let c = q.complex();
    ComplexExport {
        group: c.group().name().to_string(),
        group_order: c.group().order(),
        a: c.gens_a().elems().to_vec(),
        b: c.gens_b().elems().to_vec(),
        delta: c.delta(),
        vertices: c.num_vertices(),
        squares: (0..c.num_squares())
            .map(|s| VertexClass::ALL.map(|class| c.corner_vertex(s, class)))
            .collect(),
    }
}

fn write(dir: &Path, name: &str, contents: &str) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let p = dir.join(name);
    std::fs::write(&p, contents).with_context(|| format!("writing {}", p.display()))
}

fn css_holds(hx: &SparseBitMatrix, hz: &SparseBitMatrix) -> bool {
    hx.to_dense().mul(&hz.to_dense().transpose()).is_zero()
}

fn export_qtanner(q: &QuantumTannerCode, out: &Path) -> anyhow::Result<bool> {
    write(out, "hx.txt", &q.hx().to_text())?;
    write(out, "hz.txt", &q.hz().to_text())?;
    write(out, "metadata.json", &serde_json::to_string_pretty(&q.metadata())?)?;
    write(out, "complex.json", &serde_json::to_string_pretty(&complex_export(q))?)?;
    let ok = css_holds(q.hx(), q.hz());
    println!("n = {}, k = {}, hx·hzᵀ = 0: {ok}", q.n(), q.k());
    Ok(ok)
}

fn load_config(path: &Path, cli: &Cli) -> anyhow::Result<(ExperimentConfig, PathBuf)> {
    let (mut cfg, base) = ExperimentConfig::load(path)?;
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if cli.threads.is_some() {
        cfg.threads = cli.threads;
    }
    cfg.validate(&base)?;
    Ok((cfg, base))
}

fn read_bits(path: &Path) -> anyhow::Result<BitVector> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    Ok(compact.parse()?)
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    match &cli.cmd {
        Command::Build(args) => {
            if let Some(path) = &args.lp {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let spec: LpInstance = serde_json::from_str(&text)?;
                let lp = spec.build()?;
                write(&cli.out, "lp_hx.txt", &lp.hx().to_text())?;
                write(&cli.out, "lp_hz.txt", &lp.hz().to_text())?;
                let lp_ok = lp.hx().mul(&lp.hz().transpose()).is_zero();
                println!("lifted product: n = {}, hx·hzᵀ = 0: {lp_ok}", lp.n());
                let q = qtanner_from_lp(&lp)?;
                Ok(export_qtanner(&q, &cli.out)? && lp_ok)
            } else {
                let (cfg, base) = load_config(args.config.as_deref().expect("clap requires one"), cli)?;
                let q = build_instance(&cfg.instance, &base)?;
                export_qtanner(&q, &cli.out)
            }
        }
        Command::Decode(args) => {
            let (cfg, base) = load_config(&args.config, cli)?;
            let q = build_instance(&cfg.instance, &base)?;
            let syndrome = match (&args.syndrome, &args.error) {
                (Some(p), _) => read_bits(p)?,
                (None, Some(p)) => {
                    let e = read_bits(p)?;
                    q.syndrome_z(&e)?
                }
                (None, None) => unreachable!("clap requires one"),
            };
            let decoder = Decoder::new(&q, cfg.decoder).map_err(anyhow::Error::msg)?;
            let (outcome, state) = decoder.decode(&syndrome)?;
            let reproduced = outcome.converged && q.syndrome_z(&outcome.ehat)? == syndrome;
            write(&cli.out, "decode.json", &serde_json::to_string_pretty(&outcome)?)?;
            if args.step_log {
                write(&cli.out, "steps.jsonl", &state.step_log_jsonl())?;
            }
            println!(
                "converged: {}, |ê| = {}, syndrome reproduced: {reproduced}",
                outcome.converged,
                outcome.ehat.weight()
            );
            Ok(reproduced)
        }
        Command::Experiment(args) => {
            let (cfg, base) = load_config(&args.config, cli)?;
            let q = build_instance(&cfg.instance, &base)?;
            let report = run_on(&q, &cfg)?;
            write_report(&report, &cli.out, &cfg.output)?;
            let (records, rows) = validate_report_dir(&cli.out, &cfg.output.records, &cfg.output.summary)?;
            for row in &report.summary {
                println!(
                    "|e| = {:>3}: {}/{} equivalent, max |Z|/|e| = {:.3}",
                    row.weight, row.equivalent, row.trials, row.max_mismatch_ratio
                );
            }
            println!("{records} records, {rows} summary rows written to {}", cli.out.display());
            Ok(!args.require_success || report.all_equivalent())
        }
        Command::Bench(args) => {
            if args.sizes.iter().any(|&n| n < 3) {
                bail!("cyclic sizes must be at least 3");
            }
            let family = BenchFamily::cyclic(&args.sizes, args.reps, args.rate, cli.seed.unwrap_or(0));
            let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build()?;
            let report = pool.install(|| bench_linear_scaling(&family))?;
            write(&cli.out, "bench.json", &serde_json::to_string_pretty(&report)?)?;
            for p in &report.points {
                println!("|G| = {:>4}  n = {:>6}  |e| = {:>4}  median {:.3} ms", p.group_order, p.n, p.error_weight, p.median_ms);
            }
            match report.slope {
                Some(s) => println!("log-log slope: {s:.3}"),
                None => println!("log-log slope: undefined"),
            }
            Ok(match (args.max_slope, report.slope) {
                (Some(max), Some(s)) => s <= max,
                _ => true,
            })
        }
        Command::Certify(args) => {
            let ca = parse_code(&args.ca)?;
            let cb = parse_code(&args.cb)?;
            let samples = args.samples.map(|s| (s, cli.seed.unwrap_or(0)));
            let report = certify(&ca, &cb, args.w, args.p, samples)?;
            write(&cli.out, "certify.json", &serde_json::to_string_pretty(&report)?)?;
            println!(
                "{}-robust: {}; ({}, {})-puncture resistant: {}",
                args.w,
                report.robustness.holds,
                args.w,
                args.p,
                report.puncture_resistance.as_ref().map_or("not requested".into(), |r| r.holds.to_string())
            );
            Ok(report.holds())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
