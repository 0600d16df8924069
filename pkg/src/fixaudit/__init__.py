"""Executable audit of coloring-constraint claims about planar graphs."""

from .coloring import (
    Coloring,
    PinnedLabeling,
    chromatic_number,
    enumerate_colorings,
    is_apollonian,
    is_k_critical,
    is_uniquely_k_colorable,
    pinned_labelings,
)
from .families import generate
from .fixation import (
    CFChain,
    FixationIncidence,
    FixedSet,
    ci_condition_witness,
    ci_pair_oracle,
    ci_pairs,
    extract_chains,
    fixation_incidence,
    fixed_elements,
    is_color_fixed,
)
from .formats import emit_graph, parse_graph
from .graph import CycleRef, Graph, GraphError, common_neighbors, enumerate_cycles
from .planarity import Embedding, SideClassification, adjaceable, cycle_sides, embed, is_planar

__version__ = "0.1.0"
