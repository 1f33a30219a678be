"""Exact invariants of 3-fold terminal germs, a catalog of extremal
neighborhoods, and exhaustive monotonicity verification across flips and
divisorial-to-curve contractions.  All arithmetic exact."""

from .invariants import (
    Basket,
    Configuration,
    EMPTY_CONFIG,
    SingType,
    TerminalPoint,
    basket_of,
    c1c2_from_chi,
    config_from_obj,
    config_to_obj,
    f_from_basket,
    f_invariant,
    fraction_str,
    make_point,
    point_from_obj,
    point_to_obj,
    xi,
    xi_from_basket,
    xi_gt2,
)
from .dualgraph import (
    DuValGraph,
    GraphKind,
    GraphSum,
    SMOOTH,
    config_graph_sum,
    degenerates_to,
    elephant_components,
    elephant_graph,
    sum_dominated_by,
)
from .neighborhoods import (
    ALL_CASES,
    Case,
    ExtremalNbhd,
    ISOLATED_CASES,
    Kind,
    check_comp_d,
    check_exclude,
    graph_ex,
    graph_ey,
    make_neighborhood,
    mu,
    parse_case_label,
    source_config,
)
from .transitions import (
    Bounds,
    MoriRecursionInput,
    MoriRecursionResult,
    enumerate_divisorial_targets,
    enumerate_flip_targets,
    enumerate_targets,
    run_mori_recursion,
)
from .verifier import (
    Finding,
    VerifyReport,
    merge_reports,
    oracle_check,
    verify_all,
    verify_divisorial_case,
    verify_flip_case,
)

__version__ = "0.1.0"

__all__ = [
    "Basket", "Configuration", "EMPTY_CONFIG", "SingType", "TerminalPoint",
    "basket_of", "c1c2_from_chi", "config_from_obj", "config_to_obj",
    "f_from_basket", "f_invariant", "fraction_str", "make_point",
    "point_from_obj", "point_to_obj", "xi", "xi_from_basket", "xi_gt2",
    "DuValGraph", "GraphKind", "GraphSum", "SMOOTH", "config_graph_sum",
    "degenerates_to", "elephant_components", "elephant_graph", "sum_dominated_by",
    "ALL_CASES", "Case", "ExtremalNbhd", "ISOLATED_CASES", "Kind",
    "check_comp_d", "check_exclude", "graph_ex", "graph_ey",
    "make_neighborhood", "mu", "parse_case_label", "source_config",
    "Bounds", "MoriRecursionInput", "MoriRecursionResult",
    "enumerate_divisorial_targets", "enumerate_flip_targets",
    "enumerate_targets", "run_mori_recursion",
    "Finding", "VerifyReport", "merge_reports", "oracle_check",
    "verify_all", "verify_divisorial_case", "verify_flip_case",
    "__version__",
]
