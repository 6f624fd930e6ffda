# Analysis package
from .minimizers import (
    RATIO_BOUND,
    Regime,
    Minimizer,
    PointMap,
    Diagnosis,
    MapDiagnosis,
    phi_min,
    analytic_minimizers,
    compose_minimizer,
    classify,
    diagnose,
    diagnose_map,
)
from .probes import BumpSpec, ProbeField, sawtooth, bump, probe_field, random_periodic_field
from .second_variation import (
    NecessaryCondition,
    second_variation_1d,
    second_variation_density,
    truncated_second_variation,
    necessary_condition_check,
    flow,
    flow_second_difference,
)
from .zigzag import (
    ZigZagProfile,
    ZigZagSequence,
    profile_energy,
    mollify,
    zigzag_sequence,
    decay_rate,
)

__all__ = [
    "RATIO_BOUND",
    "Regime",
    "Minimizer",
    "PointMap",
    "Diagnosis",
    "MapDiagnosis",
    "phi_min",
    "analytic_minimizers",
    "compose_minimizer",
    "classify",
    "diagnose",
    "diagnose_map",
    "BumpSpec",
    "ProbeField",
    "sawtooth",
    "bump",
    "probe_field",
    "random_periodic_field",
    "NecessaryCondition",
    "second_variation_1d",
    "second_variation_density",
    "truncated_second_variation",
    "necessary_condition_check",
    "flow",
    "flow_second_difference",
    "ZigZagProfile",
    "ZigZagSequence",
    "profile_energy",
    "mollify",
    "zigzag_sequence",
    "decay_rate",
]
