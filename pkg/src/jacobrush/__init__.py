"""Brush cleaning on Jaco graphs and their Mycielskians."""

from .centre import BrushCentre, brush_centre, valid_supports, verify_theorem_31
from .cleaning import (
    CleaningState,
    CleaningTrace,
    FiringEvent,
    IneligibleFiring,
    clean,
    clean_directed,
    dirty_degree,
    end_configuration,
    fire,
    reverse_clean,
)
from .graph import (
    CapExceeded,
    GraphError,
    Orientation,
    SimpleGraph,
    bfs_distances,
    degrees,
    disjoint_union,
    from_edge_list,
    is_isomorphic_small,
    orient_by_ordering,
)
from .jaco import JacoGraph, JaconianData, build_jaco, jaconian_data, out_degree_unbounded, smaller_graph_degree
from .mycielski import MycielskiGraph, mycielskian
from .solvers import (
    BrushNumberResult,
    ClaimReport,
    brush_number_exact,
    brush_number_formula_jaco,
    brush_number_formula_mycielski_jaco,
    brush_number_permutation_check,
    compare_claims,
    minimal_allocation_jaco,
    ordering_cost,
    orientation_cost,
)

__version__ = "0.1.0"
