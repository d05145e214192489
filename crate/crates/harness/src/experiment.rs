//! Monte-Carlo and exhaustive decoding sweeps.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use qtanner_core::decoder::Decoder;
use qtanner_core::gf2::{kernel_basis, BitVector};
use qtanner_core::qtanner::QuantumTannerCode;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{ErrorModel, ExperimentConfig, OutputPaths};
use crate::error::{HarnessError, Result};
use crate::instance::build_instance;
use crate::sampling::{exhaustive_errors, sample_error};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub weight: usize,
    pub mismatch_weight: usize,
    pub converged: bool,
    /// Verdict of the stabilizer-equivalence oracle; false whenever the
    /// decoder did not converge.
    pub equivalent: bool,
    pub sequential_steps: usize,
    pub parallel_rounds: usize,
    pub final_mismatch_weight: usize,
    /// Milliseconds spent decoding; `None` unless timing was requested.
    pub wall_time_ms: Option<f64>,
}

/// Aggregates over all trials of one error weight.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub weight: usize,
    pub trials: u64,
    pub converged: u64,
    pub equivalent: u64,
    pub success_rate: f64,
    /// `|Z| / |e|`, taken as 0 for the zero error.
    pub mean_mismatch_ratio: f64,
    pub max_mismatch_ratio: f64,
    pub mean_sequential_steps: f64,
    pub mean_parallel_rounds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub records: Vec<TrialRecord>,
    pub summary: Vec<SummaryRow>,
}

impl ExperimentReport {
    pub fn all_equivalent(&self) -> bool {
        self.records.iter().all(|r| r.equivalent)
    }
}

/// Per-trial generator: one ChaCha stream per trial, so the thread count
/// never changes which error a trial sees.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Stabilizer membership through the dual route: `v` lies in the row space
/// of `hz` exactly when it is orthogonal to every vector of `ker hz`.
pub struct KernelOracle {
    kernel: Vec<BitVector>,
}

impl KernelOracle {
    pub fn new(q: &QuantumTannerCode) -> Self {
        Self {
            kernel: kernel_basis(q.hz_dense()),
        }
    }

    pub fn equivalent(&self, e1: &BitVector, e2: &BitVector) -> bool {
        let diff = e1 ^ e2;
        self.kernel.iter().all(|k| !k.dot(&diff))
    }
}

/// Decodes `error` and checks the estimate with two equivalence oracles.
pub fn run_trial(
    q: &QuantumTannerCode,
    decoder: &Decoder<'_>,
    oracle: &KernelOracle,
    trial: u64,
    error: &BitVector,
    timing: bool,
) -> Result<TrialRecord> {
    let syndrome = q.syndrome_z(error)?;
    let start = timing.then(Instant::now);
    let (outcome, _) = decoder.decode(&syndrome)?;
    let wall_time_ms = start.map(|s| s.elapsed().as_secs_f64() * 1e3);
    let equivalent = if outcome.converged {
        let primary = q.stabilizer_equivalent(error, &outcome.ehat);
        let independent = oracle.equivalent(error, &outcome.ehat);
        if primary != independent {
            return Err(HarnessError::OracleMismatch(trial));
        }
        primary
    } else {
        false
    };
    Ok(TrialRecord {
        trial,
        weight: error.weight(),
        mismatch_weight: outcome.initial_mismatch_weight,
        converged: outcome.converged,
        equivalent,
        sequential_steps: outcome.sequential_steps,
        parallel_rounds: outcome.parallel_rounds,
        final_mismatch_weight: outcome.final_mismatch_weight,
        wall_time_ms,
    })
}

/// Runs a validated config against an already built instance.
pub fn run_on(q: &QuantumTannerCode, cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    let decoder = Decoder::new(q, cfg.decoder).map_err(HarnessError::Config)?;
    let oracle = KernelOracle::new(q);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads.unwrap_or(0))
        .build()
        .map_err(|e| HarnessError::Config(e.to_string()))?;
    let records = pool.install(|| -> Result<Vec<TrialRecord>> {
        match &cfg.error_model {
            ErrorModel::Exhaustive { max_weight } => {
                let errors = exhaustive_errors(q.n(), *max_weight)?;
                errors
                    .par_iter()
                    .enumerate()
                    .map(|(i, e)| run_trial(q, &decoder, &oracle, i as u64, e, cfg.timing))
                    .collect()
            }
            model => (0..cfg.trials)
                .into_par_iter()
                .map(|t| {
                    let e = sample_error(model, q, &mut trial_rng(cfg.seed, t))?;
                    run_trial(q, &decoder, &oracle, t, &e, cfg.timing)
                })
                .collect(),
        }
    })?;
    log::info!("{} trials decoded", records.len());
    let summary = summarize(&records);
    Ok(ExperimentReport { records, summary })
}

/// Validates the config, builds the instance, and runs every trial.
pub fn run_experiment(cfg: &ExperimentConfig, base: &Path) -> Result<ExperimentReport> {
    cfg.validate(base)?;
    let q = build_instance(&cfg.instance, base)?;
    run_on(&q, cfg)
}

pub fn summarize(records: &[TrialRecord]) -> Vec<SummaryRow> {
    let mut by_weight: BTreeMap<usize, Vec<&TrialRecord>> = BTreeMap::new();
    for r in records {
        by_weight.entry(r.weight).or_default().push(r);
    }
    by_weight
        .into_iter()
        .map(|(weight, rs)| {
            let trials = rs.len() as u64;
            let count = |f: fn(&TrialRecord) -> bool| rs.iter().filter(|r| f(r)).count() as u64;
            let ratio = |r: &TrialRecord| if r.weight == 0 { 0.0 } else { r.mismatch_weight as f64 / r.weight as f64 };
            let mean = |f: &dyn Fn(&TrialRecord) -> f64| rs.iter().map(|r| f(r)).sum::<f64>() / trials as f64;
            let equivalent = count(|r| r.equivalent);
            SummaryRow {
                weight,
                trials,
                converged: count(|r| r.converged),
                equivalent,
                success_rate: equivalent as f64 / trials as f64,
                mean_mismatch_ratio: mean(&ratio),
                max_mismatch_ratio: rs.iter().map(|r| ratio(r)).fold(0.0, f64::max),
                mean_sequential_steps: mean(&|r| r.sequential_steps as f64),
                mean_parallel_rounds: mean(&|r| r.parallel_rounds as f64),
            }
        })
        .collect()
}

/// Writes JSON-lines records and the CSV summary into `dir`.
pub fn write_report(report: &ExperimentReport, dir: &Path, paths: &OutputPaths) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
    let records_path = dir.join(&paths.records);
    let mut out = std::io::BufWriter::new(
        std::fs::File::create(&records_path).map_err(|e| HarnessError::io(&records_path, e))?,
    );
    for r in &report.records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n").map_err(|e| HarnessError::io(&records_path, e))?;
    }
    out.flush().map_err(|e| HarnessError::io(&records_path, e))?;

    let summary_path = dir.join(&paths.summary);
    let mut w = csv::Writer::from_path(&summary_path)?;
    if report.summary.is_empty() {
        w.write_record(SUMMARY_HEADER)?;
    }
    for row in &report.summary {
        w.serialize(row)?;
    }
    w.flush().map_err(|e| HarnessError::io(&summary_path, e))?;
    Ok(())
}

/// Column names of the summary CSV, in order.
pub const SUMMARY_HEADER: [&str; 9] = [
    "weight",
    "trials",
    "converged",
    "equivalent",
    "success_rate",
    "mean_mismatch_ratio",
    "max_mismatch_ratio",
    "mean_sequential_steps",
    "mean_parallel_rounds",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::reference_spec;

    fn config(model: ErrorModel, trials: u64) -> ExperimentConfig {
        ExperimentConfig {
            seed: 11,
            trials,
            timing: false,
            threads: None,
            instance: reference_spec(),
            decoder: Default::default(),
            error_model: model,
            output: Default::default(),
        }
    }

    #[test]
    fn zero_trials_give_header_only() {
        let report = run_experiment(&config(ErrorModel::Uniform { weight: 1 }, 0), Path::new(".")).unwrap();
        assert!(report.records.is_empty());
        let dir = tempfile::tempdir().unwrap();
        write_report(&report, dir.path(), &OutputPaths::default()).unwrap();
        let csv = std::fs::read_to_string(dir.path().join("summary.csv")).unwrap();
        assert_eq!(csv.trim(), SUMMARY_HEADER.join(","));
        assert_eq!(std::fs::read_to_string(dir.path().join("records.jsonl")).unwrap(), "");
    }

    #[test]
    fn thread_count_does_not_change_records() {
        let mut cfg = config(ErrorModel::Uniform { weight: 2 }, 40);
        cfg.threads = Some(1);
        let one = run_experiment(&cfg, Path::new(".")).unwrap();
        cfg.threads = Some(4);
        let four = run_experiment(&cfg, Path::new(".")).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn equivalent_implies_converged() {
        let report = run_experiment(&config(ErrorModel::Uniform { weight: 2 }, 100), Path::new(".")).unwrap();
        assert!(report.records.iter().all(|r| !r.equivalent || r.converged));
        let total: u64 = report.summary.iter().map(|s| s.trials).sum();
        assert_eq!(total, 100);
    }

    #[test]
    fn stabilizers_are_always_corrected() {
        let report = run_experiment(&config(ErrorModel::Exhaustive { max_weight: 0 }, 0), Path::new(".")).unwrap();
        assert_eq!(report.records.len(), 1);
        assert!(report.all_equivalent());
    }

    #[test]
    fn mismatch_ratio_bounded() {
        let report = run_experiment(&config(ErrorModel::HalfGenerator, 200), Path::new(".")).unwrap();
        for row in &report.summary {
            assert!(row.max_mismatch_ratio <= 4.0);
            assert!(row.success_rate.is_finite());
        }
    }
}
