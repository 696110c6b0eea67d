"""Cops-and-robbers workbench.

Exact game solving (is the graph k-cop-win, capture times, strategies),
closed-form genus and cop-number bounds with provenance labels, the
shadow strategy guarding an isometric path, and a CLI for desk-scale
random-graph experiments.
"""

from .bounds import (
    BoundReport,
    bkl_indicators,
    cop_upper_from_genus,
    full_report,
    genus_bounds_from_density,
    genus_lower_girth5,
    girth5_cop_lower,
)
from .game import (
    DEFAULT_STATE_LIMIT,
    GameState,
    SolveResult,
    StateLimitError,
    StrategyTable,
    cop_number,
    extract_strategy,
    girth5_escape_move,
    is_copwin_dismantlable,
    kernel_name,
    simulate_play,
    solve,
)
from .generators import (
    gen_gnp,
    gen_named,
    gen_projective_incidence,
    projective_labels,
)
from .graph import (
    Graph,
    GraphMetrics,
    check_isometric_path,
    distances_from,
    girth,
    metrics,
)
from .graphio import read_graph, write_graph
from .guarding import (
    GuardState,
    exhaustive_guard_check,
    guard_step,
    make_guard,
    shadow,
    verify_guard,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DEFAULT_STATE_LIMIT",
    "GameState",
    "Graph",
    "GraphMetrics",
    "GuardState",
    "SolveResult",
    "StateLimitError",
    "StrategyTable",
    "bkl_indicators",
    "check_isometric_path",
    "cop_number",
    "cop_upper_from_genus",
    "distances_from",
    "exhaustive_guard_check",
    "extract_strategy",
    "full_report",
    "gen_gnp",
    "gen_named",
    "gen_projective_incidence",
    "genus_bounds_from_density",
    "genus_lower_girth5",
    "girth",
    "girth5_cop_lower",
    "girth5_escape_move",
    "guard_step",
    "is_copwin_dismantlable",
    "kernel_name",
    "make_guard",
    "metrics",
    "projective_labels",
    "read_graph",
    "shadow",
    "simulate_play",
    "solve",
    "verify_guard",
    "write_graph",
]
