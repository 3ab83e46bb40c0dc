import pytest

import flexgroup as fg
from flexgroup.errors import NotPrime, ParseError
from flexgroup.specs import SpecCall, SpecProduct, build_spec, parse_spec

ROUND_TRIPS = [
    "C6",
    "E(3,2)",
    "Aff(3,2,2)",
    "MatAff(2,2,[0,1;1,1])",
    "MM(5,2,2,4)",
    "Q8",
    "Perm(4; (0 1 2 3), (0 3)(1 2))",
    "C2 x C4",
    "C2 x C4 x C2",
    "E(2,2) x C4",
]


@pytest.mark.parametrize("text", ROUND_TRIPS)
def test_canonical_round_trip(text):
    spec = parse_spec(text)
    assert parse_spec(spec.to_text()) == spec


def test_product_without_spaces():
    assert parse_spec("C2xC4") == parse_spec("C2 x C4")


def test_grouping_parentheses():
    spec = parse_spec("(C2 x C2) x C3")
    assert isinstance(spec, SpecProduct)
    assert isinstance(spec.left, SpecProduct)


def test_product_is_left_associative():
    spec = parse_spec("C2 x C4 x C2")
    assert isinstance(spec.left, SpecProduct)
    assert spec.left.left == SpecCall("C", (2,))


def test_right_nested_product_keeps_parens():
    text = parse_spec("C2 x (C4 x C2)").to_text()
    assert text == "C2 x (C4 x C2)"
    assert parse_spec(text) == parse_spec("C2 x (C4 x C2)")


@pytest.mark.parametrize("text", [
    "C0",
    "",
    "   ",
    "Q9",
    "E(2)",
    "Aff(3,2)",
    "MatAff(2,2,[1,0;0,1,1])",
    "Perm(3; )",
    "Perm(3; (0))",
    "Perm(3; (0 1)(1 2))",
    "Perm(3; (0 5))",
    "(C2",
    "C2 y C4",
    "C2 x",
    "Frob(20)",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        fg.parse_group_spec(text)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse_spec("C2 x (C4")
    assert err.value.position is not None


def test_constructor_errors_propagate():
    with pytest.raises(NotPrime):
        fg.parse_group_spec("E(4,2)")


@pytest.mark.parametrize("text,builder", [
    ("C6", lambda: fg.cyclic(6)),
    ("Aff(3,2,2)", lambda: fg.scalar_affine(3, 2, 2)),
    ("E(2,3)", lambda: fg.elementary_abelian(2, 3)),
    ("Q8", fg.quaternion8),
    ("MM(7,3,1,2)", lambda: fg.miller_moreno(7, 3, 1, 2)),
])
def test_dispatch_matches_constructor(text, builder):
    assert (fg.parse_group_spec(text).table == builder().table).all()


def test_product_dispatch():
    g = fg.parse_group_spec("C2 x C4")
    h = fg.direct_product(fg.cyclic(2), fg.cyclic(4))
    assert (g.table == h.table).all()


def test_perm_spec_dispatch():
    g = fg.parse_group_spec("Perm(3; (0 1), (0 1 2))")
    assert g.order == 6


def test_mataff_matrix_shape_checked():
    spec = parse_spec("MatAff(2,2,[0,1;1,1])")
    assert build_spec(spec).order == 12
    with pytest.raises(ParseError):
        parse_spec("MatAff(2,3,[0,1;1,1])")
