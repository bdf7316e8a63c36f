"""Directed intersection representations of DAGs.

Construct color-set representations (an arc (u, v) exists iff the color
sets of u and v intersect and u's set is strictly smaller), verify them
against the defining condition, evaluate closed-form bounds, and compute
exact minimum palettes by complete search at small scale.
"""

from .bounds import (
    augmented_din,
    directed_path_din,
    general_upper_bound,
    lemma_upper_bound,
    p_intersection_upper_bound,
    source_arc_path_din,
)
from .constructors import (
    augmented_representation,
    inductive_construction,
    pairing_construction,
    source_arc_path_representation,
)
from .digraph import (
    Digraph,
    LevelDecomposition,
    FAMILIES,
    augmented_added_arcs,
    from_edge_list,
    gen_family,
    graph_from_json,
    graph_to_json,
    induced_subgraph,
    is_acyclic,
    left_to_right_order,
    load_graph,
    longest_path_levels,
    to_edge_list,
)
from .errors import (
    BudgetExhaustedError,
    CyclicGraphError,
    GraphParseError,
    SelfLoopError,
    VertexRangeError,
)
from .representation import (
    FALSE_ARC_IMPLIED,
    MISSING_INTERSECTION,
    SIZE_NOT_INCREASING,
    Representation,
    ValidityReport,
    Violation,
    canonicalize,
    palette_size,
    rep_from_json,
    rep_to_json,
    restrict,
    verify,
)
from .solver import (
    BUDGET_EXHAUSTED,
    DEFAULT_BUDGET,
    INFEASIBLE,
    OPTIMAL,
    FeasibilityResult,
    SolveBudget,
    SolveResult,
    exact_din,
    extremal_din,
    feasible_with_palette,
)

__all__ = [
    "Digraph",
    "LevelDecomposition",
    "Representation",
    "ValidityReport",
    "Violation",
    "SolveBudget",
    "SolveResult",
    "FeasibilityResult",
    "FAMILIES",
    "DEFAULT_BUDGET",
    "OPTIMAL",
    "INFEASIBLE",
    "BUDGET_EXHAUSTED",
    "MISSING_INTERSECTION",
    "SIZE_NOT_INCREASING",
    "FALSE_ARC_IMPLIED",
    "augmented_added_arcs",
    "augmented_din",
    "augmented_representation",
    "canonicalize",
    "directed_path_din",
    "exact_din",
    "extremal_din",
    "feasible_with_palette",
    "from_edge_list",
    "gen_family",
    "general_upper_bound",
    "graph_from_json",
    "graph_to_json",
    "induced_subgraph",
    "inductive_construction",
    "is_acyclic",
    "left_to_right_order",
    "lemma_upper_bound",
    "load_graph",
    "longest_path_levels",
    "p_intersection_upper_bound",
    "pairing_construction",
    "palette_size",
    "rep_from_json",
    "rep_to_json",
    "restrict",
    "source_arc_path_din",
    "source_arc_path_representation",
    "to_edge_list",
    "verify",
    "BudgetExhaustedError",
    "CyclicGraphError",
    "GraphParseError",
    "SelfLoopError",
    "VertexRangeError",
]
