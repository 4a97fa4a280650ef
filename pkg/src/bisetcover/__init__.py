"""Cover solver for k-connected subgraphs and crossing supermodular biset functions."""

from .bisets import (
    Biset,
    Edge,
    GroundSet,
    enumerate_bisets,
    mask_of,
    ids_of,
    popcount,
    relation,
)
from .covers import (
    AREA_COVER_STATS,
    CoverReport,
    FailureCertificate,
    approximation_ratio,
    area_cover,
    brute_force_opt,
    exact_directed_cover,
    growing_cover,
    iteration_budget_kcs,
    skew_cover,
    solve_kcs,
)
from .errors import (
    BisetCoverError,
    CoverCheckError,
    EnumerationCapError,
    InfeasibleCoverError,
    InvariantError,
    ParseError,
    PreconditionError,
)
from .functions import (
    BisetFunctionView,
    area_view,
    classify,
    compute_k_f,
    fan_view,
    kcs_view,
    positive_union,
    residual,
)
from .instances import Instance, format_instance, parse_instance, random_instance
from .lp import build_biset_lp, build_lp_from_edges, dump_lp, solve_lp
from .rationals import rat, rat_float, rat_str
from .verify import biset_connectivity, certify_solution, is_k_connected, st_connectivity

__version__ = "0.1.0"

__all__ = [
    "AREA_COVER_STATS",
    "Biset",
    "BisetCoverError",
    "BisetFunctionView",
    "CoverCheckError",
    "CoverReport",
    "Edge",
    "EnumerationCapError",
    "FailureCertificate",
    "GroundSet",
    "InfeasibleCoverError",
    "Instance",
    "InvariantError",
    "ParseError",
    "PreconditionError",
    "approximation_ratio",
    "area_cover",
    "area_view",
    "biset_connectivity",
    "brute_force_opt",
    "build_biset_lp",
    "build_lp_from_edges",
    "certify_solution",
    "classify",
    "compute_k_f",
    "dump_lp",
    "enumerate_bisets",
    "exact_directed_cover",
    "fan_view",
    "format_instance",
    "growing_cover",
    "ids_of",
    "is_k_connected",
    "iteration_budget_kcs",
    "kcs_view",
    "mask_of",
    "parse_instance",
    "popcount",
    "positive_union",
    "random_instance",
    "rat",
    "rat_float",
    "rat_str",
    "relation",
    "residual",
    "skew_cover",
    "solve_kcs",
    "solve_lp",
    "st_connectivity",
]
