"""Solvers and verifiers for edge, list, total, labelling and equitable colouring."""

from __future__ import annotations

from .edge import (edge_color_k, exact_chromatic_index, light_edge_order, list_edge_color,
                   misra_gries, random_lists, uniform_lists, vizing_edge_color)
from .equitable import ThresholdResult, equitable_edge_color, equitable_threshold, split_graph
from .reduction import ReductionStep, reduction_graph_order, reduction_order
from .result import SolveResult
from .total import (lambda_pT, list_total_color, p1_total_label, total_chromatic_number,
                    total_color_k)
from .verify import (EdgeColoring, TotalColoring, TotalLabelling, balance_profile,
                     verify_edge_coloring, verify_equitable, verify_total_coloring,
                     verify_total_labelling)

__all__ = [
    "EdgeColoring", "ReductionStep", "SolveResult", "ThresholdResult", "TotalColoring",
    "TotalLabelling", "balance_profile", "edge_color_k", "equitable_edge_color",
    "equitable_threshold", "exact_chromatic_index", "lambda_pT", "light_edge_order",
    "list_edge_color", "list_total_color", "misra_gries", "p1_total_label", "random_lists",
    "reduction_graph_order", "reduction_order", "split_graph", "total_chromatic_number",
    "total_color_k", "uniform_lists", "verify_edge_coloring", "verify_equitable",
    "verify_total_coloring", "verify_total_labelling", "vizing_edge_color",
]
