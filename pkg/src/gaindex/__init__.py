"""Geometric-arithmetic index of unicyclic graphs.

Library surface: graph construction and unicyclic structure (graph),
GA/AG evaluation (indices), extremal families and closed forms (families),
GA-decreasing rewrites and the reduction pipeline (transforms), exhaustive
enumeration and bound verification (enumeration), CLI (cli).
"""

from .graph import (
    CycleStructure,
    EdgeListError,
    Graph,
    GraphError,
    NotUnicyclicError,
    PendantTree,
    VertexClass,
    build_graph,
    canonical_form,
    classify_cycle_vertex,
    find_cycle,
    format_edge_list,
    is_connected,
    is_isomorphic,
    is_unicyclic,
    parse_edge_list,
    pendant_tree,
    relabel,
)
from .indices import EdgeContribution, ag_index, edge_contribution, f_eval, g_eval, ga_index
from .families import (
    FamilySpec,
    bound_interval,
    classify_family,
    compare_AB,
    compare_CD,
    ga_sn3_closed,
    ga_spq4_closed,
    ga_srk3_closed,
    make_family,
)
from .transforms import (
    MonotonicityError,
    PreconditionError,
    SmallOrderError,
    TraceStep,
    TransformTrace,
    arc_transform,
    finish_one_neighbor_deg2,
    finish_two_neighbors_deg2,
    reduction_pipeline,
    relocate_min,
    set_runtime_checks,
    star_transform,
)
from .enumeration import (
    BoundReport,
    MonotonicityReport,
    enumerate_unicyclic,
    enumerate_unicyclic_by_chords,
    free_trees,
    verify_bounds,
    verify_monotonicity,
)

__version__ = "0.1.0"
