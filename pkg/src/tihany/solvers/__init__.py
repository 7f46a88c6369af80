from .budget import UNLIMITED, Budget, BudgetExhausted, Tracker
from .cliques import (
    clique_number,
    cliques_of_size,
    cliques_up_to,
    max_clique_mask,
    maximal_cliques,
    stability_number,
)
from .coloring import Coloring, chromatic_number, find_coloring, greedy_dsatur, is_colorable
from .induced import are_isomorphic, find_induced, is_induced_copy
from .matching import Matching, matching_number, maximum_matching

__all__ = [
    "UNLIMITED",
    "Budget",
    "BudgetExhausted",
    "Coloring",
    "Matching",
    "Tracker",
    "are_isomorphic",
    "chromatic_number",
    "clique_number",
    "cliques_of_size",
    "cliques_up_to",
    "find_coloring",
    "find_induced",
    "greedy_dsatur",
    "is_colorable",
    "is_induced_copy",
    "matching_number",
    "max_clique_mask",
    "maximal_cliques",
    "maximum_matching",
    "stability_number",
]
