import pytest
from hypothesis import given, strategies as st

from groupgraphs.families import (
    Cyclic,
    Dihedral,
    DirectProduct,
    ElementaryAbelian,
    GeneralizedQuaternion,
    GroupSpecError,
    Semidihedral,
    Symmetric,
    parse_group_spec,
    render_group_spec,
)


def test_grammar_basics():
    assert parse_group_spec("Z(6)") == Cyclic(6)
    assert parse_group_spec("Z(2)*Z(9)") == DirectProduct((Cyclic(2), Cyclic(9)))
    assert parse_group_spec("E(3,2)") == ElementaryAbelian(3, 2)
    assert parse_group_spec("D(12)") == Dihedral(12)
    assert parse_group_spec("Q(8)") == GeneralizedQuaternion(8)
    assert parse_group_spec("SD(16)") == Semidihedral(16)
    assert parse_group_spec("S(4)") == Symmetric(4)


def test_whitespace_insignificant():
    assert parse_group_spec(" Z( 2 ) * Z(9) ") == parse_group_spec("Z(2)*Z(9)")


def test_dihedral_bound():
    with pytest.raises(GroupSpecError, match="even and >= 6"):
        parse_group_spec("D(5)")
    with pytest.raises(GroupSpecError):
        parse_group_spec("D(4)")


def test_parameter_bounds():
    with pytest.raises(GroupSpecError, match="prime"):
        parse_group_spec("E(4,2)")
    with pytest.raises(GroupSpecError):
        parse_group_spec("Q(10)")
    with pytest.raises(GroupSpecError):
        parse_group_spec("SD(12)")
    with pytest.raises(GroupSpecError):
        parse_group_spec("Z(0)")


def test_syntax_error_reports_position():
    with pytest.raises(GroupSpecError) as exc:
        parse_group_spec("Z(2)*!")
    assert exc.value.position == 5
    with pytest.raises(GroupSpecError) as exc:
        parse_group_spec("W(3)")
    assert exc.value.position == 0
    with pytest.raises(GroupSpecError):
        parse_group_spec("")


def test_order_cap():
    with pytest.raises(GroupSpecError, match="cap"):
        parse_group_spec("S(7)", cap=5039)
    assert parse_group_spec("S(7)", cap=5040).order == 5040


def test_order_cap_env(monkeypatch):
    monkeypatch.setenv("GG_ORDER_CAP", "10")
    with pytest.raises(GroupSpecError, match="cap"):
        parse_group_spec("Z(11)")
    assert parse_group_spec("Z(10)") == Cyclic(10)


_factors = st.one_of(
    st.integers(1, 80).map(Cyclic),
    st.tuples(st.sampled_from([2, 3, 5, 7]), st.integers(1, 3)).map(
        lambda t: ElementaryAbelian(*t)),
    st.integers(3, 40).map(lambda n: Dihedral(2 * n)),
    st.integers(2, 20).map(lambda n: GeneralizedQuaternion(4 * n)),
    st.integers(2, 10).map(lambda n: Semidihedral(8 * n)),
    st.integers(1, 6).map(Symmetric),
)

_specs = st.one_of(
    _factors,
    st.lists(_factors, min_size=2, max_size=4).map(lambda fs: DirectProduct(tuple(fs))),
)


@given(_specs)
def test_parse_render_roundtrip(spec):
    text = render_group_spec(spec)
    assert parse_group_spec(text, cap=10**9) == spec
    assert render_group_spec(parse_group_spec(text, cap=10**9)) == text
