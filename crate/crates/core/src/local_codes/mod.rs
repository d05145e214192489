//! Component codes and the tensor / dual tensor machinery built from them.

mod dual_tensor;
mod linear;
mod robustness;

pub use dual_tensor::{coset_leader_decode, DualTensorCode, Split, COSET_TABLE_BITS_CAP};
pub use linear::{
    code_from_kernel, min_distance, random_full_rank_code, sample_component_pair, tensor_code, DistanceMode,
    LinearCode, MinDistance, EXHAUSTIVE_DIM_CAP,
};
pub use robustness::{
    check_puncture_resistance, check_robustness, decompose_r_plus_c, find_cover, line_bound, Certainty,
    CoverFailure, Decomposition, PuncturedDistances, RobustnessMode, RobustnessReport, ROBUSTNESS_DIM_CAP,
};
