"""Exact solvers for P_t-free graphs driven by the space of induced paths."""

__version__ = "0.1.0"

from .coloring import (
    ColoringInstance,
    ColoringSolution,
    brute_force_list3col,
    brute_force_min_cost_3col,
    preprocess,
    solve_independent_oct,
    solve_list3col,
    solve_min_cost_3col,
)
from .decomposition import (
    find_heavy_vertex,
    find_heavy_vertex_color,
    gyarfas_separator,
    potential,
)
from .errors import InvariantViolation, NotPtFree, ParseError, SizeGuardError
from .generators import GenSpec, gen
from .graph import (
    Graph,
    Instance,
    closed_neighborhood,
    components,
    parse_graph,
    parse_instance,
    write_graph,
)
from .matching import (
    brute_force_induced_matching,
    solve_induced_matching,
    squared_line_graph,
)
from .mwis import BranchStats, MwisSolution, brute_force_mis, find_mis
from .paths import (
    bucket_report,
    enumerate_colored_paths,
    enumerate_induced_paths,
    is_pt_free,
)
