//! Decode-time scaling over a family of growing instances.

use std::time::Instant;

use qtanner_core::decoder::{Decoder, DecoderConfig};
use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

use qtanner_core::gf2::BitVector;

use crate::config::InstanceSpec;
use crate::error::{HarnessError, Result};
use crate::experiment::trial_rng;
use crate::instance::{build_instance, cyclic_spec};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchFamily {
    pub instances: Vec<InstanceSpec>,
    pub reps: usize,
    /// Error weight is `⌈rate · n⌉`.
    pub rate: f64,
    pub seed: u64,
    pub decoder: DecoderConfig,
}

impl BenchFamily {
    /// `Z_n` for each size, with the reference generators and codes.
    pub fn cyclic(sizes: &[usize], reps: usize, rate: f64, seed: u64) -> Self {
        Self {
            instances: sizes.iter().map(|&n| cyclic_spec(n)).collect(),
            reps,
            rate,
            seed,
            decoder: DecoderConfig::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchPoint {
    pub group_order: usize,
    pub n: usize,
    pub error_weight: usize,
    pub reps: usize,
    pub median_ms: f64,
    pub converged: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingReport {
    pub points: Vec<BenchPoint>,
    /// Least-squares slope of `ln median_ms` against `ln n`; `None` with
    /// fewer than two distinct sizes.
    pub slope: Option<f64>,
}

/// Median decode time (mismatch setup included) per instance.
pub fn bench_linear_scaling(family: &BenchFamily) -> Result<ScalingReport> {
    if family.reps == 0 {
        return Err(HarnessError::Config("reps must be positive".into()));
    }
    let mut points = Vec::new();
    for (idx, spec) in family.instances.iter().enumerate() {
        let q = build_instance(spec, std::path::Path::new("."))?;
        let decoder = Decoder::new(&q, family.decoder).map_err(HarnessError::Config)?;
        let n = q.n();
        let weight = ((family.rate * n as f64).ceil() as usize).min(n);
        // one untimed decode fills the local code caches
        decoder.decode(&q.syndrome_z(&BitVector::zeros(n))?)?;
        let mut times = Vec::with_capacity(family.reps);
        let mut converged = 0;
        for rep in 0..family.reps {
            let mut rng = trial_rng(family.seed ^ idx as u64, rep as u64);
            let e = BitVector::from_indices(n, sample(&mut rng, n, weight));
            let s = q.syndrome_z(&e)?;
            let start = Instant::now();
            let (outcome, _) = decoder.decode(&s)?;
            times.push(start.elapsed().as_secs_f64() * 1e3);
            converged += outcome.converged as usize;
        }
        times.sort_by(f64::total_cmp);
        let mid = times.len() / 2;
        let median_ms = if times.len() % 2 == 1 { times[mid] } else { (times[mid - 1] + times[mid]) / 2.0 };
        log::info!("|G| = {}: n = {n}, median {median_ms:.3} ms", q.complex().group().order());
        points.push(BenchPoint {
            group_order: q.complex().group().order(),
            n,
            error_weight: weight,
            reps: family.reps,
            median_ms,
            converged,
        });
    }
    let slope = loglog_slope(&points.iter().map(|p| (p.n as f64, p.median_ms)).collect::<Vec<_>>());
    Ok(ScalingReport { points, slope })
}

pub fn loglog_slope(xy: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = xy
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if pts.len() < 2 || sxx < 1e-12 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}
