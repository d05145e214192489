use std::path::Path;

use qtanner_core::complex::{build_complex, GeneratorSet, Side};
use qtanner_core::group::build_group;
use qtanner_core::local_codes::{sample_component_pair, LinearCode};
use qtanner_core::qtanner::{build_qtanner, QuantumTannerCode};

use crate::config::{parse_code, CodeSource, InstanceSpec};
use crate::error::{HarnessError, Result};

pub fn component_codes(source: &CodeSource, delta: usize, base: &Path) -> Result<(LinearCode, LinearCode)> {
    Ok(match source {
        CodeSource::Named { ca, cb } => (parse_code(ca)?, parse_code(cb)?),
        CodeSource::Sampled {
            rho,
            delta_target,
            seed,
            budget,
        } => sample_component_pair(delta, *rho, *delta_target, *seed, *budget)?,
        CodeSource::Files { ca, cb } => {
            let read = |p: &Path| -> Result<LinearCode> {
                let full = base.join(p);
                let text = std::fs::read_to_string(&full).map_err(|e| HarnessError::io(&full, e))?;
                Ok(LinearCode::parse_text(&text)?)
            };
            (read(ca)?, read(cb)?)
        }
    })
}

pub fn build_instance(spec: &InstanceSpec, base: &Path) -> Result<QuantumTannerCode> {
    let group = build_group(&spec.group)?;
    let a = GeneratorSet::new(&group, spec.a.clone(), Side::Left)?;
    let b = GeneratorSet::new(&group, spec.b.clone(), Side::Right)?;
    let complex = build_complex(&group, &a, &b)?;
    let (ca, cb) = component_codes(&spec.codes, spec.a.len(), base)?;
    Ok(build_qtanner(&complex, &ca, &cb)?)
}

/// The Z_6 instance with `A = B = {1, 3, 5}`, `C_A = [3,1,3]`, `C_B = [3,2,2]`.
pub fn reference_spec() -> InstanceSpec {
    cyclic_spec(6)
}

/// Cyclic family `Z_n` with `A = B = {1, n/2, n-1}` and the reference codes.
pub fn cyclic_spec(n: usize) -> InstanceSpec {
    InstanceSpec {
        group: qtanner_core::group::GroupSpec::Cyclic(n),
        a: vec![1, n / 2, n - 1],
        b: vec![1, n / 2, n - 1],
        codes: CodeSource::Named {
            ca: "repetition:3".into(),
            cb: "parity:3".into(),
        },
    }
}
