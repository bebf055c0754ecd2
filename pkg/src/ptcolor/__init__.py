"""Approximate coloring of 3-colorable P_t-free graphs with checkable certificates."""

from .closure import ClosureResult, Conflict, closure_F, propagate_colors
from .driver import Colored, FoundPt, approx_color, bound, result_to_json
from .finish import ListInstance, color_frontier, two_list_color
from .graph import (
    Coloring,
    Graph,
    GraphFormatError,
    bipartition_or_odd_cycle,
    connected_components,
    from_edge_list,
    parse_graph,
    format_graph,
    read_graph,
    verify_coloring,
    verify_path,
    verify_triangle,
)
from .oracles import (
    NaeFormula,
    OracleCapExceeded,
    brute_list_color,
    brute_three_color,
    find_induced_path,
    nae_solve,
    verify_refutation,
)
from .outcomes import (
    InducedPt,
    ListExhaustion,
    NotThreeColorable,
    PathFromV,
    Plain,
    SeedResult,
    SmallSubgraph,
    WithTriangle,
)
from .seed import find_seed
from .start import color_excluding_start, color_from_start

__version__ = "0.1.0"
