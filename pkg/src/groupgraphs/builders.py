"""The three graphs attached to a finite group, plus their reduced variants.

* power graph: x ~ y iff one is a positive power of the other;
* enhanced power graph: x ~ y iff both lie in a common cyclic subgroup;
* order superpower graph: x ~ y iff o(x) divides o(y) or vice versa.

Enhanced adjacency is assembled from the maximal cyclic subgroups (a union of
cliques); the direct exists-a-generator scan is kept as a test oracle.
Superpower adjacency is decided per order class and then expanded.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graphs import SimpleGraph, _graph_from_rows, dominating_vertices, puncture
from .groups import FiniteGroup, _cyclic_masks, maximal_cyclic_subgroups


class GraphKind(Enum):
    POWER = "power"
    ENHANCED = "enhanced"
    SUPER = "super"


class Reduction(Enum):
    NONE = "none"
    DELETE_IDENTITY = "identity"
    DELETE_DOMINATING = "dominating"


@dataclass(frozen=True)
class GroupGraph:
    """A group graph together with its vertex-to-element labelling."""

    graph: SimpleGraph
    kind: GraphKind
    group: FiniteGroup
    elements: tuple[int, ...]  # vertex -> element index
    reduction: Reduction

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.group.labels[e] for e in self.elements)

    def edge_label(self, u: int, v: int) -> str:
        lab = self.labels
        return f"({lab[u]}, {lab[v]})"


def _base(graph: SimpleGraph, kind: GraphKind, group: FiniteGroup) -> GroupGraph:
    return GroupGraph(graph, kind, group, tuple(range(group.n)), Reduction.NONE)


def power_graph(group: FiniteGroup) -> GroupGraph:
    n = group.n
    masks = _cyclic_masks(group)
    rows = [masks[x] & ~(1 << x) for x in range(n)]
    for y in range(n):
        mask = masks[y] & ~(1 << y)
        bit = 1 << y
        while mask:
            low = mask & -mask
            rows[low.bit_length() - 1] |= bit
            mask ^= low
    return _base(_graph_from_rows(n, rows), GraphKind.POWER, group)


def enhanced_power_graph(group: FiniteGroup) -> GroupGraph:
    n = group.n
    rows = [0] * n
    for member in maximal_cyclic_subgroups(group):
        mask = 0
        for e in member.elements:
            mask |= 1 << e
        for e in member.elements:
            rows[e] |= mask & ~(1 << e)
    return _base(_graph_from_rows(n, rows), GraphKind.ENHANCED, group)


def enhanced_adjacency_scan(group: FiniteGroup) -> SimpleGraph:
    """Oracle: x ~ y iff some element generates a cyclic subgroup containing
    both.  Quantifies over every generator (no maximality filtering, no
    deduplication), cross-checking the clique-union construction."""
    n = group.n
    rows = [0] * n
    for mask in _cyclic_masks(group):
        bits = mask
        while bits:
            low = bits & -bits
            rows[low.bit_length() - 1] |= mask & ~low
            bits ^= low
    return _graph_from_rows(n, rows)


def order_superpower_graph(group: FiniteGroup) -> GroupGraph:
    n = group.n
    classes: dict[int, int] = {}
    for e, o in enumerate(group.orders):
        classes[o] = classes.get(o, 0) | (1 << e)
    neighbour_mask = {
        d1: sum(mask for d2, mask in classes.items() if d1 % d2 == 0 or d2 % d1 == 0)
        for d1 in classes
    }
    rows = [neighbour_mask[o] & ~(1 << e) for e, o in enumerate(group.orders)]
    return _base(_graph_from_rows(n, rows), GraphKind.SUPER, group)


def reduce_graph(gg: GroupGraph, mode: Reduction) -> GroupGraph:
    """Delete the identity vertex, or every dominating vertex."""
    if gg.reduction is not Reduction.NONE:
        raise ValueError("graph is already reduced")
    if mode is Reduction.DELETE_IDENTITY:
        drop = [gg.elements.index(0)]
    elif mode is Reduction.DELETE_DOMINATING:
        drop = list(dominating_vertices(gg.graph))
    else:
        raise ValueError(f"not a reduction mode: {mode}")
    smaller, kept = puncture(gg.graph, drop_vertices=drop)
    return GroupGraph(smaller, gg.kind, gg.group,
                      tuple(gg.elements[i] for i in kept), mode)


def graph_json(gg: GroupGraph) -> dict:
    degrees: dict[int, int] = {}
    for u in range(gg.graph.n):
        d = gg.graph.degree(u)
        degrees[d] = degrees.get(d, 0) + 1
    return {
        "kind": gg.kind.value,
        "group": gg.group.spec.render(),
        "reduction": gg.reduction.value,
        "n": gg.graph.n,
        "m": gg.graph.m,
        "degree_histogram": {str(d): degrees[d] for d in sorted(degrees)},
    }
