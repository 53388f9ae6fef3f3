from fractions import Fraction

from groupgraphs.catalog import (
    builtin_catalog,
    catalog_manifest_text,
    load_manifest,
    parse_catalog_text,
)
from groupgraphs.theorems import (
    GroupContext,
    TheoremId,
    TheoremVerdict,
    fuzz_apex_graphs,
    sweep_catalog,
    verify_theorem,
)
from groupgraphs.families import parse_group_spec


def one(tid, spec_text):
    verdicts = verify_theorem(tid, spec_text)
    assert len(verdicts) == 1
    return verdicts[0]


def test_example_verdicts():
    v = one(TheoremId.C_EPG_MEC, "Q(8)")
    assert (v.lhs, v.rhs, v.agree) == (False, False, True)
    v = one(TheoremId.T_EPG_MC, "E(2,4)")
    assert (v.lhs, v.rhs, v.agree) == (True, True, True)
    v = one(TheoremId.T_DK, "Z(2)*Z(9)")
    assert (v.lhs, v.rhs, v.agree) == (True, True, True)
    v = one(TheoremId.T_S_MC, "Z(6)")
    assert (v.lhs, v.rhs, v.agree) == (False, False, True)
    v = one(TheoremId.C_POWER, "E(3,2)")
    assert (v.lhs, v.rhs, v.agree) == (True, True, True)
    v = one(TheoremId.C_S_FULLEXP, "Z(64)")
    assert (v.lhs, v.rhs, v.agree) == (True, True, True)


def test_applicability_gates():
    assert not one(TheoremId.C_EPG_MEC, "Z(12)").applicable  # cyclic
    assert not one(TheoremId.C_EPG_NILP, "S(3)").applicable  # not nilpotent
    assert not one(TheoremId.C_DQSD, "Z(6)").applicable
    assert not one(TheoremId.C_S_FULLEXP, "S(4)").applicable  # exponent unattained
    assert not one(TheoremId.P_S_EVEN, "Z(15)").applicable  # odd order
    assert not one(TheoremId.P_S_EVEN, "Q(16)").applicable  # p-group
    assert not one(TheoremId.P_INV, "E(2,3)").applicable  # p-group
    assert not one(TheoremId.T_DK, "S(3)").applicable  # not nilpotent
    assert one(TheoremId.T_EPG_MC, "Z(1)").agree  # trivial group is fine everywhere


def test_t_graph_rows_per_kind():
    rows = verify_theorem(TheoremId.T_GRAPH, "Q(8)")
    assert [r.kind for r in rows] == ["power", "enhanced", "super"]
    by_kind = {r.kind: r for r in rows}
    assert not by_kind["super"].applicable  # superpower graph of a 2-group is complete
    assert by_kind["power"].agree and by_kind["enhanced"].agree
    assert "dominating" in by_kind["power"].witness


def test_witnesses_present_on_false_sides():
    v = one(TheoremId.C_EPG_MEC, "D(12)")
    assert v.lhs is False and v.witness is not None
    v = one(TheoremId.C_DQSD, "Q(8)")
    assert v.witness.startswith("edge ")


def test_p_inv_non_vacuous_on_required_groups():
    for text in ["Z(2)*Z(9)", "Z(2)*Z(3)"]:
        v = one(TheoremId.P_INV, text)
        assert v.applicable and v.lhs is True and v.rhs is True and v.agree, text


def test_p_inv_vacuous_when_premise_fails():
    v = one(TheoremId.P_INV, "Z(4)*Z(9)")
    assert v.applicable and v.lhs is False and v.agree


def test_regularity_checks():
    assert one(TheoremId.R_POW, "Z(9)").lhs is True
    assert one(TheoremId.R_POW, "Z(6)").lhs is False
    assert one(TheoremId.R_POW, "E(3,2)").lhs is True
    v = one(TheoremId.R_EPG, "Q(8)")
    assert v.lhs is False and v.rhs is False and v.agree
    assert one(TheoremId.R_EPG, "E(2,4)").agree


def test_verify_accepts_group_and_spec_objects():
    spec = parse_group_spec("Z(6)")
    from groupgraphs.groups import build_group
    assert one(TheoremId.T_S_MC, "Z(6)") == verify_theorem(TheoremId.T_S_MC, spec)[0]
    built = verify_theorem(TheoremId.T_S_MC, build_group(spec))[0]
    assert built.agree and built.group == "Z(6)"


def test_group_context_caches():
    from groupgraphs.builders import GraphKind
    ctx = GroupContext(parse_group_spec("Q(16)"))
    assert ctx.graph(GraphKind.SUPER) is ctx.graph(GraphKind.SUPER)
    assert ctx.family is ctx.family


def test_sweep_small_catalog():
    specs = [parse_group_spec(t) for t in
             ["Z(6)", "Q(8)", "D(12)", "E(2,3)", "Z(2)*Z(9)", "S(4)", "SD(16)"]]
    result = sweep_catalog(specs=specs, jobs=1)
    assert result.disagreements == 0 and not result.errors
    assert result.summary_dict()["groups"] == 7
    # deterministic ordering
    keys = [v.sort_key() for v in result.verdicts]
    assert keys == sorted(keys)


def test_sweep_specific_ids():
    specs = [parse_group_spec(t) for t in ["D(12)", "Q(16)", "SD(16)"]]
    result = sweep_catalog([TheoremId.C_DQSD], specs=specs, jobs=1)
    assert len(result.verdicts) == 3
    assert all(v.lhs is False for v in result.verdicts)


def test_sweep_reports_build_errors_without_aborting(monkeypatch):
    specs = [parse_group_spec("Z(6)"), parse_group_spec("Z(100)", cap=1000)]
    monkeypatch.setenv("GG_ORDER_CAP", "50")  # re-parsing Z(100) in the sweep fails
    result = sweep_catalog([TheoremId.T_S_MC], specs=specs, jobs=1)
    ok = [v for v in result.verdicts if v.group == "Z(6)"]
    assert len(ok) == 1 and ok[0].agree
    assert len(result.errors) == 1 and "cap" in result.errors[0].error


def test_sweep_max_order_keeps_product_slack():
    result = sweep_catalog([TheoremId.T_S_MC], max_order=16, jobs=1)
    groups = {v.group for v in result.verdicts}
    assert "Z(2)*Z(9)" in groups  # order 18 product survives the 16 family bound
    assert "Z(17)" not in groups
    assert all("*" in g or parse_group_spec(g).order <= 16 for g in groups)


def test_verdict_json_shape():
    v = one(TheoremId.T_S_MC, "Z(6)")
    row = v.to_json_dict()
    assert list(row) == ["theorem", "group", "kind", "applicable", "lhs", "rhs",
                         "agree", "witness"]
    assert "millis" in v.to_json_dict(timings=True)
    assert isinstance(v, TheoremVerdict)


def test_fuzz_reproducible():
    a = fuzz_apex_graphs(60, (4, 9), Fraction(1, 2), rng_seed=7)
    b = fuzz_apex_graphs(60, (4, 9), Fraction(1, 2), rng_seed=7)
    assert a == b
    assert a.count == 60 and a.compared + a.skipped_complete == 60
    assert a.disagreements == 0


def test_fuzz_extreme_probabilities():
    dense = fuzz_apex_graphs(20, (3, 3), Fraction(1, 1), rng_seed=1)
    assert dense.skipped_complete == 20  # p=1 makes every sample complete
    sparse = fuzz_apex_graphs(20, (4, 4), Fraction(0, 1), rng_seed=1)
    assert sparse.compared == 20 and sparse.agreements == 20  # stars


def test_catalog_manifest_frozen():
    generated = catalog_manifest_text()
    assert [s.render() for s in load_manifest()] == \
        [s.render() for s in parse_catalog_text(generated)]
    specs = load_manifest()
    rendered = {s.render() for s in specs}
    assert {"Z(2)*Z(9)", "Z(2)*Z(3)", "Q(8)", "SD(64)", "S(4)"} <= rendered
    assert all(s.order <= 64 or "*" in s.render() for s in specs)
    assert all(s.order <= 72 for s in specs)


def test_catalog_composition():
    cat = builtin_catalog()
    rendered = [s.render() for s in cat]
    assert len(rendered) == len(set(rendered))  # no duplicate expressions
    assert "E(2,1)" not in rendered and "S(1)" not in rendered
    assert not any(r.startswith("Z(1)*") or r.endswith("*Z(1)") for r in rendered)
