"""Flow-engine checks against independent oracles.

The subset oracles recompute connectivity by exhausting deletion sets, so
they share nothing with the max-flow path they certify.
"""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from groupgraphs import _flowpure, kernel
from groupgraphs.builders import enhanced_power_graph, order_superpower_graph, power_graph
from groupgraphs.connectivity import (
    connectivity_report,
    edge_connectivity,
    is_minimally_connected,
    is_minimally_edge_connected,
    max_flow_unit,
    minimally_edge_connected_fast,
    vertex_connectivity,
)
from groupgraphs.families import parse_group_spec
from groupgraphs.graphs import (
    complete_graph,
    degree_profile,
    diameter,
    dominating_vertices,
    graph_from_edges,
    is_connected,
    puncture,
)
from groupgraphs.groups import build_group


def g(text):
    return build_group(parse_group_spec(text))


def star(k):
    return graph_from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def cycle(n):
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# --- independent oracles (exhaustive deletion sets) ---------------------------

def oracle_edge_connectivity(graph):
    if graph.n <= 1 or not is_connected(graph):
        return 0
    edges = graph.edges()
    for k in range(len(edges) + 1):
        for subset in itertools.combinations(edges, k):
            h, _ = puncture(graph, drop_edges=subset)
            if not is_connected(h):
                return k
    return len(edges)


def oracle_vertex_connectivity(graph):
    if graph.n <= 1 or not is_connected(graph):
        return 0
    for k in range(graph.n):
        for subset in itertools.combinations(range(graph.n), k):
            h, _ = puncture(graph, drop_vertices=subset)
            if h.n <= 1 or not is_connected(h):
                return k
    return graph.n - 1


def test_max_flow_basics():
    k4 = complete_graph(4)
    assert max_flow_unit(k4, 0, 3) == 3
    path = graph_from_edges(3, [(0, 1), (1, 2)])
    assert max_flow_unit(path, 0, 2) == 1
    assert max_flow_unit(graph_from_edges(2, []), 0, 1) == 0
    assert max_flow_unit(path, 0, 2, node_capacities=True) == 1
    with pytest.raises(ValueError):
        max_flow_unit(k4, 1, 1)
    with pytest.raises(ValueError):
        max_flow_unit(k4, 0, 1, node_capacities=True)  # adjacent endpoints


def test_connectivity_known_values():
    assert edge_connectivity(star(7)) == 1
    assert edge_connectivity(complete_graph(5)) == 4
    assert edge_connectivity(complete_graph(64)) == 63
    assert vertex_connectivity(complete_graph(6)) == 5
    assert vertex_connectivity(cycle(5)) == 2
    assert vertex_connectivity(complete_graph(1)) == 0
    assert edge_connectivity(graph_from_edges(1, [])) == 0
    assert edge_connectivity(graph_from_edges(4, [(0, 1), (2, 3)])) == 0
    assert vertex_connectivity(graph_from_edges(4, [(0, 1), (2, 3)])) == 0


def test_spot_values_from_group_graphs():
    pe9 = enhanced_power_graph(g("E(3,2)")).graph
    prof = degree_profile(pe9)
    assert prof.min_degree == 2 and diameter(pe9) == 2
    assert edge_connectivity(pe9) == 2  # flow agrees with the diameter-2 rule

    s18 = order_superpower_graph(g("Z(2)*Z(9)")).graph
    assert degree_profile(s18).min_degree == 9
    assert vertex_connectivity(s18) == 9

    s6 = order_superpower_graph(g("Z(6)")).graph
    assert len(dominating_vertices(s6)) == 3
    ok, witness = is_minimally_edge_connected(s6)
    assert not ok and witness is not None

    p8 = power_graph(g("E(2,3)")).graph
    assert degree_profile(p8).degrees == (7,) + (1,) * 7  # the star on 8 vertices
    assert vertex_connectivity(p8) == 1
    assert is_minimally_connected(p8) == (True, None)


def test_minimality_known_values():
    assert is_minimally_edge_connected(complete_graph(3)) == (True, None)
    assert is_minimally_edge_connected(star(7)) == (True, None)
    assert is_minimally_connected(star(7)) == (True, None)
    assert is_minimally_connected(complete_graph(9)) == (True, None)
    assert is_minimally_edge_connected(complete_graph(2)) == (True, None)
    pe9 = enhanced_power_graph(g("E(3,2)")).graph
    assert is_minimally_edge_connected(pe9) == (True, None)
    assert is_minimally_connected(pe9)[0] is False
    with pytest.raises(ValueError, match="connected"):
        is_minimally_edge_connected(graph_from_edges(3, [(0, 1)]))
    # single vertex: no edges, vacuously minimal
    assert is_minimally_edge_connected(complete_graph(1)) == (True, None)
    assert is_minimally_connected(complete_graph(1)) == (True, None)


def test_minimality_witness_is_first_failing_edge():
    s6 = order_superpower_graph(g("Z(6)")).graph
    _, witness = is_minimally_edge_connected(s6)
    k0 = edge_connectivity(s6)
    for e in s6.edges():
        h, _ = puncture(s6, drop_edges=[e])
        if edge_connectivity(h) != k0 - 1:
            assert witness == e
            break
        assert e != witness


def test_fast_path():
    assert minimally_edge_connected_fast(star(7)) is True
    pe_q8 = enhanced_power_graph(g("Q(8)")).graph
    assert minimally_edge_connected_fast(pe_q8) is False  # two dominating vertices
    s6 = order_superpower_graph(g("Z(6)")).graph
    assert minimally_edge_connected_fast(s6) is False  # three dominating vertices
    with pytest.raises(ValueError):
        minimally_edge_connected_fast(complete_graph(4))
    with pytest.raises(ValueError):
        minimally_edge_connected_fast(cycle(5))  # no dominating vertex


def _graphs_up_to(n_max):
    return st.integers(2, n_max).flatmap(
        lambda n: st.builds(
            lambda picks: graph_from_edges(
                n, [e for e, keep in zip(itertools.combinations(range(n), 2), picks)
                    if keep]),
            st.lists(st.booleans(), min_size=n * (n - 1) // 2,
                     max_size=n * (n - 1) // 2),
        )
    )


_random_graphs = _graphs_up_to(7)
# the subset oracles enumerate deletion sets, so keep their inputs small
_oracle_graphs = _graphs_up_to(6)


@given(_oracle_graphs)
@settings(max_examples=80, deadline=None)
def test_flow_matches_subset_oracles(graph):
    assert edge_connectivity(graph) == oracle_edge_connectivity(graph)
    assert vertex_connectivity(graph) == oracle_vertex_connectivity(graph)


@given(_random_graphs)
@settings(max_examples=60, deadline=None)
def test_minimality_matches_definition(graph):
    if not is_connected(graph) or graph.m == 0:
        return
    k0 = edge_connectivity(graph)
    expected = True
    expected_witness = None
    for e in graph.edges():
        h, _ = puncture(graph, drop_edges=[e])
        if edge_connectivity(h) != k0 - 1:
            expected, expected_witness = False, e
            break
    assert is_minimally_edge_connected(graph) == (expected, expected_witness)
    v0 = vertex_connectivity(graph)
    expected = True
    expected_witness = None
    for e in graph.edges():
        h, _ = puncture(graph, drop_edges=[e])
        if vertex_connectivity(h) != v0 - 1:
            expected, expected_witness = False, e
            break
    assert is_minimally_connected(graph) == (expected, expected_witness)


@given(_random_graphs)
@settings(max_examples=100, deadline=None)
def test_whitney_chain_and_diameter_rule(graph):
    kappa = vertex_connectivity(graph)
    kappa_edge = edge_connectivity(graph)
    delta = degree_profile(graph).min_degree
    assert kappa <= kappa_edge <= delta
    d = diameter(graph)
    if d is not None and d <= 2:
        assert kappa_edge == delta


@given(_random_graphs)
@settings(max_examples=60, deadline=None)
def test_single_edge_deletion_drops_by_at_most_one(graph):
    if graph.m == 0:
        return
    k0 = edge_connectivity(graph)
    v0 = vertex_connectivity(graph)
    for e in graph.edges():
        h, _ = puncture(graph, drop_edges=[e])
        assert k0 - 1 <= edge_connectivity(h) <= k0
        assert v0 - 1 <= vertex_connectivity(h) <= v0


@given(_random_graphs, st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_relabeling_invariance(graph, rnd):
    perm = list(range(graph.n))
    rnd.shuffle(perm)
    relabeled = graph_from_edges(
        graph.n, [(perm[u], perm[v]) for u, v in graph.edges()])
    assert edge_connectivity(relabeled) == edge_connectivity(graph)
    assert vertex_connectivity(relabeled) == vertex_connectivity(graph)


def test_backends_agree_on_random_graphs():
    if kernel.backend_name() == "pure":
        pytest.skip("compiled kernel unavailable")
    from groupgraphs import _flowcore
    rng = random.Random(2024)
    for _ in range(150):
        n = rng.randint(2, 12)
        us, vs = [], []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < rng.choice([0.2, 0.5, 0.9]):
                    us.append(u)
                    vs.append(v)
        assert _flowcore.edge_conn(n, us, vs) == _flowpure.edge_conn(n, us, vs)
        assert _flowcore.vertex_conn(n, us, vs) == _flowpure.vertex_conn(n, us, vs)
        graph = graph_from_edges(n, list(zip(us, vs)))
        if is_connected(graph) and graph.m:
            assert (_flowcore.mec_witness(n, us, vs)
                    == _flowpure.mec_witness(n, us, vs))
            assert (_flowcore.mc_witness(n, us, vs)
                    == _flowpure.mc_witness(n, us, vs))


def test_connectivity_report():
    report = connectivity_report(order_superpower_graph(g("Z(6)")).graph)
    assert report.min_degree == 3
    assert report.dominating_count == 3
    assert report.minimally_edge_connected is False
    assert report.diameter == 2
    d = report.to_json_dict()
    assert d["vertex_connectivity"] == 3 and d["edge_connectivity"] == 3
    disconnected = connectivity_report(graph_from_edges(3, [(0, 1)]))
    assert disconnected.diameter is None
    assert disconnected.minimally_edge_connected is None
    single = connectivity_report(complete_graph(1))
    assert single.diameter == 0 and single.minimally_connected is True
