"""Finite-group graphs and their connectivity invariants.

Constructs groups from the ``Z/E/D/Q/SD/S`` family language, builds their
power, enhanced power and order superpower graphs, computes exact
connectivity invariants via unit-capacity max flow, and machine-checks the
minimal-connectivity characterizations of those graphs over a reproducible
catalog.
"""

from .families import GroupSpec, GroupSpecError, parse_group_spec, render_group_spec
from .groups import (
    Classification,
    CyclicSubgroup,
    FiniteGroup,
    MaximalCyclicFamily,
    NilpotentShape,
    build_group,
    classify_group,
    cyclic_subgroup,
    element_order_table,
    exponent_info,
    is_nilpotent,
    maximal_cyclic_subgroups,
    order_spectrum,
)
from .graphs import (
    DegreeProfile,
    GraphError,
    SimpleGraph,
    degree_profile,
    diameter,
    dominating_vertices,
    format_dot,
    format_edge_list,
    graph_from_edges,
    is_complete,
    is_connected,
    parse_edge_list,
    puncture,
)
from .builders import (
    GraphKind,
    GroupGraph,
    Reduction,
    enhanced_power_graph,
    order_superpower_graph,
    power_graph,
    reduce_graph,
)
from .connectivity import (
    ConnectivityReport,
    connectivity_report,
    edge_connectivity,
    is_minimally_connected,
    is_minimally_edge_connected,
    max_flow_unit,
    minimally_edge_connected_fast,
    vertex_connectivity,
)
from .kernel import backend_name

__version__ = "0.1.0"

__all__ = [
    "GroupSpec", "GroupSpecError", "parse_group_spec", "render_group_spec",
    "FiniteGroup", "build_group", "element_order_table", "cyclic_subgroup",
    "maximal_cyclic_subgroups", "exponent_info", "order_spectrum",
    "is_nilpotent", "classify_group", "Classification", "NilpotentShape",
    "CyclicSubgroup", "MaximalCyclicFamily",
    "SimpleGraph", "GraphError", "graph_from_edges", "degree_profile",
    "DegreeProfile", "diameter", "dominating_vertices", "is_complete",
    "is_connected", "puncture", "format_edge_list", "parse_edge_list",
    "format_dot",
    "GroupGraph", "GraphKind", "Reduction", "power_graph",
    "enhanced_power_graph", "order_superpower_graph", "reduce_graph",
    "max_flow_unit", "edge_connectivity", "vertex_connectivity",
    "is_minimally_edge_connected", "is_minimally_connected",
    "minimally_edge_connected_fast", "ConnectivityReport",
    "connectivity_report", "backend_name",
]
