"""Multicommodity max-flow heuristic over capacitated directed networks.

Pipeline: per-commodity max flow (maxflow) -> colored path tables (tables)
-> greedy minimum-color-count selection (heuristic), with an exhaustive
oracle for small instances (oracle), a text/DOT network model (netmodel),
and a CLI front end (cli).
"""

from .heuristic import (
    Assignment,
    BoundReport,
    UpperBounds,
    greedy_solve,
    inclusion_exclusion_bound,
    upper_bounds,
    validate_assignment,
)
from .maxflow import (
    ACTIVE,
    DISCARDED,
    USED,
    AugmentResult,
    Color,
    ColoredPath,
    Cut,
    FlowState,
    augment,
    decompose_cut_paths,
    find_augmenting_path,
    max_flow,
    zero_flow,
)
from .netmodel import (
    Commodity,
    Edge,
    Network,
    NetworkParseError,
    export_dot,
    parse_network,
    path_nodes,
    render_network,
    render_path,
    validate_network,
)
from .oracle import (
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_MAX_PATHS,
    GapReport,
    OracleLimitError,
    OracleResult,
    SimplePath,
    enumerate_paths,
    gap_report,
    optimal_value,
)
from .tables import (
    COLOR_NAMES,
    FlowTables,
    apply_shipment,
    audit_tables,
    build_tables,
    color_count,
)

__version__ = "0.1.0"

__all__ = [
    "ACTIVE",
    "Assignment",
    "AugmentResult",
    "BoundReport",
    "COLOR_NAMES",
    "Color",
    "ColoredPath",
    "Commodity",
    "Cut",
    "DEFAULT_MAX_CANDIDATES",
    "DEFAULT_MAX_PATHS",
    "DISCARDED",
    "Edge",
    "FlowState",
    "FlowTables",
    "GapReport",
    "Network",
    "NetworkParseError",
    "OracleLimitError",
    "OracleResult",
    "SimplePath",
    "USED",
    "UpperBounds",
    "apply_shipment",
    "audit_tables",
    "augment",
    "build_tables",
    "color_count",
    "decompose_cut_paths",
    "enumerate_paths",
    "export_dot",
    "find_augmenting_path",
    "gap_report",
    "greedy_solve",
    "inclusion_exclusion_bound",
    "max_flow",
    "optimal_value",
    "parse_network",
    "path_nodes",
    "render_network",
    "render_path",
    "upper_bounds",
    "validate_assignment",
    "validate_network",
    "zero_flow",
]
