"""Exact connectivity invariants via unit-capacity max flow, and the
minimal-(edge)-connectivity deciders.

The brute-force deciders recompute connectivity from scratch for every deleted
edge.  The fast decider evaluates the unique-dominating-vertex + regular-
remainder criterion and must agree with brute force on its hypothesis class
(non-complete graphs having a dominating vertex); that agreement is itself a
tested property.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from .graphs import (
    SimpleGraph,
    degree_profile,
    diameter,
    dominating_vertices,
    is_complete,
    is_connected,
    is_regular,
    puncture,
)


def max_flow_unit(g: SimpleGraph, s: int, t: int, node_capacities: bool = False) -> int:
    """Max number of edge-disjoint (or, with ``node_capacities``, internally
    vertex-disjoint) s-t paths."""
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError(f"endpoints ({s}, {t}) out of range")
    if s == t:
        raise ValueError("source and sink must differ")
    if node_capacities and g.adjacent(s, t):
        raise ValueError("vertex-disjoint path count needs non-adjacent endpoints")
    us, vs = g.edge_arrays()
    return kernel.max_flow(g.n, us, vs, s, t, node_capacities)


def edge_connectivity(g: SimpleGraph) -> int:
    """Minimum number of edges whose removal disconnects the graph
    (0 when already disconnected or on a single vertex)."""
    if g.n <= 1:
        return 0
    us, vs = g.edge_arrays()
    return kernel.edge_conn(g.n, us, vs)


def vertex_connectivity(g: SimpleGraph) -> int:
    """Minimum vertex cut size; n-1 on complete graphs, 0 when disconnected."""
    if g.n <= 1:
        return 0
    us, vs = g.edge_arrays()
    return kernel.vertex_conn(g.n, us, vs)


def _minimality(g: SimpleGraph, witness_fn) -> tuple[bool, tuple[int, int] | None]:
    if not is_connected(g):
        raise ValueError("minimality is defined for connected graphs only")
    if g.m == 0:
        return True, None  # single vertex: vacuous
    us, vs = g.edge_arrays()
    idx = witness_fn(g.n, us, vs)
    if idx < 0:
        return True, None
    return False, (us[idx], vs[idx])


def is_minimally_edge_connected(g: SimpleGraph) -> tuple[bool, tuple[int, int] | None]:
    """True iff deleting any single edge lowers the edge connectivity by
    exactly 1; on False the witness is the first failing edge."""
    return _minimality(g, kernel.mec_witness)


def is_minimally_connected(g: SimpleGraph) -> tuple[bool, tuple[int, int] | None]:
    """True iff deleting any single edge lowers the vertex connectivity by
    exactly 1; on False the witness is the first failing edge."""
    return _minimality(g, kernel.mc_witness)


def minimally_edge_connected_fast(g: SimpleGraph) -> bool:
    """Minimal edge connectivity decided structurally: a unique dominating
    vertex whose removal leaves a regular graph.

    Only valid on non-complete graphs with at least one dominating vertex.
    """
    if is_complete(g):
        raise ValueError("criterion requires a non-complete graph")
    doms = dominating_vertices(g)
    if not doms:
        raise ValueError("criterion requires a dominating vertex")
    if len(doms) != 1:
        return False
    rest, _ = puncture(g, drop_vertices=doms)
    return is_regular(rest)


@dataclass(frozen=True)
class ConnectivityReport:
    n: int
    m: int
    min_degree: int
    vertex_connectivity: int
    edge_connectivity: int
    diameter: int | None  # None = infinite (disconnected)
    dominating_count: int
    connected: bool
    minimally_edge_connected: bool | None  # None when disconnected
    mec_witness: tuple[int, int] | None
    minimally_connected: bool | None
    mc_witness: tuple[int, int] | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "min_degree": self.min_degree,
            "vertex_connectivity": self.vertex_connectivity,
            "edge_connectivity": self.edge_connectivity,
            "diameter": self.diameter,
            "dominating_count": self.dominating_count,
            "connected": self.connected,
            "minimally_edge_connected": self.minimally_edge_connected,
            "mec_witness": list(self.mec_witness) if self.mec_witness else None,
            "minimally_connected": self.minimally_connected,
            "mc_witness": list(self.mc_witness) if self.mc_witness else None,
        }


def connectivity_report(g: SimpleGraph) -> ConnectivityReport:
    profile = degree_profile(g)
    kappa = vertex_connectivity(g)
    kappa_edge = edge_connectivity(g)
    diam = diameter(g)
    connected = g.n <= 1 or diam is not None
    if g.n > 0:
        if not kappa <= kappa_edge <= profile.min_degree:
            raise AssertionError(
                f"connectivity chain violated: {kappa} <= {kappa_edge} "
                f"<= {profile.min_degree} fails")
        if diam is not None and diam <= 2 and kappa_edge != profile.min_degree:
            raise AssertionError(
                f"diameter {diam} <= 2 but edge connectivity {kappa_edge} "
                f"!= min degree {profile.min_degree}")
    mec = mec_w = mc = mc_w = None
    if connected and g.n > 0:
        mec, mec_w = is_minimally_edge_connected(g)
        mc, mc_w = is_minimally_connected(g)
    return ConnectivityReport(
        n=g.n,
        m=g.m,
        min_degree=profile.min_degree,
        vertex_connectivity=kappa,
        edge_connectivity=kappa_edge,
        diameter=diam,
        dominating_count=len(dominating_vertices(g)),
        connected=connected,
        minimally_edge_connected=mec,
        mec_witness=mec_w,
        minimally_connected=mc,
        mc_witness=mc_w,
    )
