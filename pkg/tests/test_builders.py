import pytest

from groupgraphs.builders import (
    GraphKind,
    Reduction,
    enhanced_adjacency_scan,
    enhanced_power_graph,
    graph_json,
    order_superpower_graph,
    power_graph,
    reduce_graph,
)
from groupgraphs.catalog import builtin_catalog
from groupgraphs.families import parse_group_spec
from groupgraphs.graphs import (
    degree_profile,
    dominating_vertices,
    is_complete,
    is_regular,
)
from groupgraphs.groups import build_group, classify_group, exponent_info, maximal_cyclic_subgroups


def g(text):
    return build_group(parse_group_spec(text))


def test_power_graph_shapes():
    star8 = power_graph(g("E(2,3)")).graph
    assert degree_profile(star8).degrees == (7,) + (1,) * 7
    # complete exactly for cyclic p-groups
    assert is_complete(power_graph(g("Z(9)")).graph)
    assert is_complete(power_graph(g("Z(8)")).graph)
    pz6 = power_graph(g("Z(6)")).graph
    assert not is_complete(pz6)
    assert not pz6.adjacent(2, 3)  # no power relation between orders 3 and 2
    p9 = power_graph(g("E(3,2)")).graph
    assert degree_profile(p9).degrees == (8,) + (2,) * 8


def test_enhanced_graph_shapes():
    assert is_complete(enhanced_power_graph(g("Z(6)")).graph)
    e9 = g("E(3,2)")
    assert enhanced_power_graph(e9).graph == power_graph(e9).graph
    q8 = enhanced_power_graph(g("Q(8)")).graph
    assert dominating_vertices(q8) == (0, 2)
    assert sorted(q8.degree(v) for v in range(8)) == [3, 3, 3, 3, 3, 3, 7, 7]


def test_superpower_graph_shapes():
    for text in ["Z(8)", "E(2,3)", "Q(16)", "D(16)", "Z(27)"]:
        assert is_complete(order_superpower_graph(g(text)).graph), text
    s6 = order_superpower_graph(g("Z(6)")).graph
    assert not is_complete(s6)
    assert dominating_vertices(s6) == (0, 1, 5)
    s18 = order_superpower_graph(g("Z(2)*Z(9)")).graph
    invol = next(x for x, o in enumerate(g("Z(2)*Z(9)").orders) if o == 2)
    assert s18.degree(invol) == 9


def test_enhanced_equals_existential_scan_over_catalog():
    for spec in builtin_catalog():
        if spec.order > 64:
            continue
        group = build_group(spec)
        assert enhanced_power_graph(group).graph == enhanced_adjacency_scan(group), \
            spec.render()


def test_spanning_subgraph_chain_over_catalog():
    for spec in builtin_catalog():
        group = build_group(spec)
        p = power_graph(group).graph.rows
        e = enhanced_power_graph(group).graph.rows
        s = order_superpower_graph(group).graph.rows
        for u in range(group.n):
            assert p[u] & ~e[u] == 0, spec.render()
            assert p[u] & ~s[u] == 0, spec.render()


def test_enhanced_not_inside_superpower_for_z6():
    group = g("Z(6)")
    e = set(enhanced_power_graph(group).graph.edges())
    s = set(order_superpower_graph(group).graph.edges())
    assert not e <= s
    assert (2, 3) in e and (2, 3) not in s  # orders 3 and 2 share no divisibility


def test_dominating_vertices_are_family_intersection():
    for spec in builtin_catalog():
        group = build_group(spec)
        doms = dominating_vertices(enhanced_power_graph(group).graph)
        assert doms == maximal_cyclic_subgroups(group).common_elements(), spec.render()


def test_full_exponent_superpower_has_three_dominating():
    for spec in builtin_catalog():
        group = build_group(spec)
        cls = classify_group(group)
        exp, full = exponent_info(group)
        if full and exp >= 3 and not cls.is_p_group:
            assert len(dominating_vertices(order_superpower_graph(group).graph)) >= 3, \
                spec.render()


def test_reductions():
    star8 = reduce_graph(power_graph(g("E(2,3)")), Reduction.DELETE_IDENTITY)
    assert star8.graph.n == 7 and star8.graph.m == 0
    assert is_regular(star8.graph)
    assert star8.elements == tuple(range(1, 8))

    k8 = reduce_graph(power_graph(g("Z(9)")), Reduction.DELETE_IDENTITY)
    assert is_complete(k8.graph) and k8.graph.n == 8

    s6 = reduce_graph(order_superpower_graph(g("Z(6)")), Reduction.DELETE_DOMINATING)
    assert s6.graph.n == 3 and s6.elements == (2, 3, 4)

    with pytest.raises(ValueError):
        reduce_graph(s6, Reduction.DELETE_IDENTITY)  # already reduced
    with pytest.raises(ValueError):
        reduce_graph(power_graph(g("Z(4)")), Reduction.NONE)


def test_reduce_identity_on_trivial_group():
    reduced = reduce_graph(power_graph(g("Z(1)")), Reduction.DELETE_IDENTITY)
    assert reduced.graph.n == 0
    assert is_regular(reduced.graph)


def test_labels_follow_reduction():
    gg = enhanced_power_graph(g("Q(8)"))
    assert gg.labels[0] == "e"
    reduced = reduce_graph(gg, Reduction.DELETE_DOMINATING)
    assert "e" not in reduced.labels and "a^2" not in reduced.labels


def test_graph_json():
    payload = graph_json(order_superpower_graph(g("Z(6)")))
    assert payload["kind"] == "super"
    assert payload["group"] == "Z(6)"
    assert payload["reduction"] == "none"
    assert payload["n"] == 6 and payload["m"] == 13
    assert payload["degree_histogram"] == {"3": 1, "4": 2, "5": 3}
