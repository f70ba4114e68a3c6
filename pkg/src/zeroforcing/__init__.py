"""Exact zero forcing and connected zero forcing toolkit."""

from .families import (
    ArityMismatch,
    BadPartition,
    InvalidSpec,
    OrderTooSmall,
    PCSpec,
    cartesian,
    complete,
    complete_multipartite,
    corona,
    cycle,
    generalized_corona,
    path,
    pc_graph,
    star,
    strong,
    supertriangle,
    vertex_sum,
    wheel,
)
from .forcing import (
    ForcingTrace,
    NotForcing,
    derived_coloring,
    derived_coloring_sequential,
    forces_one_round,
    is_czfs,
    is_zfs,
    propagation_time,
    propagation_trace,
    replay_trace,
)
from .graphs import (
    CapacityExceeded,
    EmptySet,
    EmptyVertexSet,
    EndpointOutOfRange,
    Graph,
    GraphError,
    SelfLoop,
    TooLarge,
    are_isomorphic,
    components,
    format_edge_list,
    induced_subgraph,
    is_connected,
    is_connected_in_components,
    is_path_graph,
    iter_vertices,
    mask_of,
    new_graph,
    parse_edge_list,
    relabel,
    vertices_of,
)
from .recognize import ExtremalForm, FormKind, min_extremal_spec, recognize_extremal_form
from .solver import (
    BudgetExceeded,
    SolveReport,
    SolverLimits,
    WrongSize,
    connected_zero_forcing_number,
    enumerate_min_czfs,
    enumerate_min_zfs,
    propagation_extrema,
    solve_report,
    zero_forcing_number,
)

__version__ = "0.1.0"
