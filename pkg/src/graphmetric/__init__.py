"""Metrics on F_q^n induced by directed graphs.

The weight of a word is the number of vertices reachable from its support.
"""
from .canonical import (
    ReducedForm,
    expanded_form,
    is_hierarchical,
    isomorphic_metrics,
    reduced_form,
    same_metric,
    strongly_connected_components,
)
from .errors import (
    EnumerationTooLarge,
    FormatError,
    GraphMetricError,
    NotHierarchical,
    SearchTooLarge,
)
from .graph import Digraph, closure, dominates, induced_subgraph, is_shortcut, reverse
from .linalg import LinearCode, LinearMap, dual_code, rref
from .metric import WeightTable, g_distance, g_weight, g_weight_reduced, weight_table
from .results import CheckResult

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "EnumerationTooLarge",
    "FormatError",
    "GraphMetricError",
    "NotHierarchical",
    "SearchTooLarge",
    "Digraph",
    "LinearCode",
    "LinearMap",
    "ReducedForm",
    "WeightTable",
    "closure",
    "dominates",
    "dual_code",
    "expanded_form",
    "g_distance",
    "g_weight",
    "g_weight_reduced",
    "induced_subgraph",
    "is_hierarchical",
    "is_shortcut",
    "isomorphic_metrics",
    "reduced_form",
    "reverse",
    "rref",
    "same_metric",
    "strongly_connected_components",
    "weight_table",
]
