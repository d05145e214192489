//! Robustness reports for a component-code pair.

use qtanner_core::local_codes::{check_puncture_resistance, RobustnessMode, RobustnessReport};
use qtanner_core::local_codes::LinearCode;
use serde::Serialize;

use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct CertifyReport {
    pub delta_a: usize,
    pub delta_b: usize,
    pub robustness: RobustnessReport,
    /// Present when `p > 0`.
    pub puncture_resistance: Option<RobustnessReport>,
}

impl CertifyReport {
    pub fn holds(&self) -> bool {
        self.robustness.holds && self.puncture_resistance.as_ref().is_none_or(|r| r.holds)
    }
}

/// `w`-robustness of the pair and, if `p > 0`, `(w, p)`-resistance to
/// puncturing. `samples = None` requests exhaustive certification.
pub fn certify(ca: &LinearCode, cb: &LinearCode, w: usize, p: usize, samples: Option<(usize, u64)>) -> Result<CertifyReport> {
    let mode = match samples {
        None => RobustnessMode::Exhaustive,
        Some((samples, seed)) => RobustnessMode::Sampled { samples, seed },
    };
    let robustness = check_puncture_resistance(ca, cb, w, 0, mode)?;
    let puncture_resistance = if p > 0 {
        Some(check_puncture_resistance(ca, cb, w, p, mode)?)
    } else {
        None
    };
    Ok(CertifyReport {
        delta_a: ca.length(),
        delta_b: cb.length(),
        robustness,
        puncture_resistance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repetition_parity_pair() {
        let r = certify(&LinearCode::repetition(4), &LinearCode::single_parity(4), 3, 1, None).unwrap();
        assert!(r.holds());
        assert!(r.puncture_resistance.is_some());
        let plain = certify(&LinearCode::repetition(4), &LinearCode::single_parity(4), 3, 0, None).unwrap();
        assert!(plain.puncture_resistance.is_none());
    }

    #[test]
    fn oversized_pair_is_an_error() {
        assert!(certify(&LinearCode::repetition(9), &LinearCode::repetition(9), 3, 0, None).is_err());
    }
}
