//! Error models.

use std::collections::BTreeSet;

use itertools::Itertools;
use qtanner_core::gf2::BitVector;
use qtanner_core::qtanner::QuantumTannerCode;
use rand::seq::index::sample;
use rand::Rng;

use crate::config::ErrorModel;
use crate::error::{HarnessError, Result};

/// Cap on the number of errors an exhaustive sweep may enumerate.
pub const EXHAUSTIVE_ERROR_CAP: u128 = 5_000_000;

/// Draws one error. `Exhaustive` is not a random model; see [`exhaustive_errors`].
pub fn sample_error<R: Rng>(model: &ErrorModel, q: &QuantumTannerCode, rng: &mut R) -> Result<BitVector> {
    let n = q.n();
    match *model {
        ErrorModel::Uniform { weight } => {
            if weight > n {
                return Err(HarnessError::Infeasible(format!("weight {weight} exceeds n = {n}")));
            }
            Ok(BitVector::from_indices(n, sample(rng, n, weight)))
        }
        ErrorModel::Clustered { vertices, weight } => {
            let complex = q.complex();
            let total = complex.num_vertices();
            if vertices > total {
                return Err(HarnessError::Infeasible(format!("{vertices} vertices requested, {total} exist")));
            }
            let pool: Vec<usize> = sample(rng, total, vertices)
                .into_iter()
                .flat_map(|v| complex.local_view(v).iter().copied())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            if weight > pool.len() {
                return Err(HarnessError::Infeasible(format!(
                    "weight {weight} exceeds the {} squares around the chosen vertices",
                    pool.len()
                )));
            }
            Ok(BitVector::from_indices(n, sample(rng, pool.len(), weight).into_iter().map(|i| pool[i])))
        }
        ErrorModel::HalfGenerator => {
            let hz = q.hz();
            if hz.nrows() == 0 {
                return Err(HarnessError::Infeasible("code has no Z-type generators".into()));
            }
            let row = hz.row(rng.gen_range(0..hz.nrows()));
            let take = row.len().div_ceil(2);
            Ok(BitVector::from_indices(n, sample(rng, row.len(), take).into_iter().map(|i| row[i])))
        }
        ErrorModel::Exhaustive { .. } => Err(HarnessError::Config(
            "exhaustive sweeps enumerate errors instead of sampling them".into(),
        )),
    }
}

/// Number of supports of weight at most `max_weight` on `n` positions.
pub fn exhaustive_count(n: usize, max_weight: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    for w in 0..=max_weight.min(n) {
        total += binom;
        binom = binom * (n - w) as u128 / (w + 1) as u128;
    }
    total
}

/// Every error of weight `0..=max_weight`, ordered by weight then lexicographically.
pub fn exhaustive_errors(n: usize, max_weight: usize) -> Result<Vec<BitVector>> {
    let count = exhaustive_count(n, max_weight);
    if count > EXHAUSTIVE_ERROR_CAP {
        return Err(HarnessError::Infeasible(format!(
            "{count} errors up to weight {max_weight}, above the cap of {EXHAUSTIVE_ERROR_CAP}"
        )));
    }
    Ok((0..=max_weight.min(n))
        .flat_map(|w| (0..n).combinations(w))
        .map(|s| BitVector::from_indices(n, s))
        .collect())
}
