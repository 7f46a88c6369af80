"""Graph family generators and their validators."""

from __future__ import annotations

from .chains import ChainFailure, TriangleChain, TriangleChainSpec, random_chain_spec, triangle_chain
from .intervals import IntervalSpec, fuzzy_interval_graph, interval_graph, random_circular_spec
from .labeled import Labeled, SpecError, labeled_from_names
from .named import (
    ICOSAHEDRON_F,
    NAMED,
    icosahedron,
    l_k33,
    mantled_lk33,
    named_family,
    ring_of_five,
    rotator,
    twister,
)
from .strips import (
    Composition,
    HyperEdge,
    Strip,
    StripStructureSpec,
    line_strip,
    random_composition,
    random_strip,
    rederive_strip,
    strip_compose,
    strip_z,
)
from .thickening import (
    Thickening,
    ThickeningSpec,
    block_pattern,
    is_reduced_pattern,
    random_thickening_spec,
    thicken,
)
from .threecliqued import (
    TCResult,
    ThreeCliquedGraph,
    hex_chain,
    line_graph,
    materialize,
    tc_generator,
)

__all__ = [
    "ChainFailure", "Composition", "HyperEdge", "ICOSAHEDRON_F", "IntervalSpec", "Labeled",
    "NAMED", "SpecError", "Strip", "StripStructureSpec", "TCResult", "Thickening",
    "ThickeningSpec", "ThreeCliquedGraph", "TriangleChain", "TriangleChainSpec",
    "block_pattern", "fuzzy_interval_graph", "hex_chain", "icosahedron", "interval_graph",
    "is_reduced_pattern", "l_k33", "labeled_from_names", "line_graph", "line_strip",
    "mantled_lk33", "materialize", "named_family", "random_chain_spec", "random_circular_spec",
    "random_composition", "random_strip", "random_thickening_spec", "rederive_strip",
    "ring_of_five", "rotator", "strip_compose", "strip_z", "tc_generator", "thicken",
    "triangle_chain", "twister",
]
