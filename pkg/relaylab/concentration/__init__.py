from .batch import parse_experiment, parse_experiments, run_batch, run_experiment
from .blowup import (
    MC_BLOCK_TRIALS,
    MeasureFloorError,
    ball_blowup_semianalytic,
    ball_radius_for_measure,
    blowup_radius,
    enlarged_measure_mc,
    exact_blowup,
    halfspace_blowup_exact,
    mc_blowup,
    measure_floor,
    scaling_invariance_check,
    standard_concentration_bound,
    theoretical_bound,
)
from .norm import noise_norm_concentration, noise_norm_probability
from .sets import distance_to_set, exact_enlarged_measure, has_exact_enlargement, set_measure

__all__ = [
    "MC_BLOCK_TRIALS",
    "MeasureFloorError",
    "ball_blowup_semianalytic",
    "ball_radius_for_measure",
    "blowup_radius",
    "distance_to_set",
    "enlarged_measure_mc",
    "exact_blowup",
    "exact_enlarged_measure",
    "halfspace_blowup_exact",
    "has_exact_enlargement",
    "mc_blowup",
    "measure_floor",
    "noise_norm_concentration",
    "noise_norm_probability",
    "parse_experiment",
    "parse_experiments",
    "run_batch",
    "run_experiment",
    "scaling_invariance_check",
    "set_measure",
    "standard_concentration_bound",
    "theoretical_bound",
]
