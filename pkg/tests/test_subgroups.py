import pytest

import flexgroup as fg
from flexgroup.errors import IndexOutOfRange, OrderCapExceeded, TrivialGroup

from bruteforce import (
    bf_all_subgroups,
    bf_center,
    bf_conjugacy_classes,
    bf_normal_subgroups,
)

TINY = ["C6", "E(2,2)", "Q8", "Perm(3; (0 1), (0 1 2))", "C2 x C4",
        "Perm(4; (0 1 2), (1 2 3))"]


# -- closure -----------------------------------------------------------------

def test_closure_empty_is_trivial(built):
    g = built("C6")
    assert fg.closure(g, []).members == (0,)


def test_closure_c6_from_orders_2_and_3(built):
    g = built("C6")
    assert fg.closure(g, [3, 2]).order == 6


def test_closure_q8_two_units(built):
    g = built("Q8")
    i = g.labels.index("i")
    j = g.labels.index("j")
    assert fg.closure(g, [i, j]).order == 8


def test_closure_index_out_of_range(built):
    with pytest.raises(IndexOutOfRange):
        fg.closure(built("C6"), [6])


# -- cyclicity ---------------------------------------------------------------

def test_trivial_subgroup_is_cyclic(built):
    g = built("C6")
    ok, gen = fg.is_cyclic_subgroup(g, fg.closure(g, []))
    assert ok and gen == g.identity


def test_klein_four_not_cyclic(built):
    g = built("E(2,2)")
    ok, gen = fg.is_cyclic_subgroup(g, fg.closure(g, [1, 2]))
    assert not ok and gen is None


def test_q8_proper_subgroups_cyclic_with_certificates(built):
    g = built("Q8")
    for sub in fg.all_subgroups(g):
        if sub.order < 8:
            ok, gen = fg.is_cyclic_subgroup(g, sub)
            assert ok
            assert fg.closure(g, [gen]).members == sub.members


# -- conjugacy ---------------------------------------------------------------

def test_abelian_classes_are_singletons(built):
    assert all(len(c) == 1 for c in fg.conjugacy_classes(built("C6")))


def test_q8_class_sizes(built):
    sizes = sorted(len(c) for c in fg.conjugacy_classes(built("Q8")))
    assert sizes == [1, 1, 2, 2, 2]


def test_sym3_class_sizes(built):
    sizes = sorted(len(c) for c in fg.conjugacy_classes(built("Perm(3; (0 1), (0 1 2))")))
    assert sizes == [1, 2, 3]


@pytest.mark.parametrize("spec", TINY)
def test_classes_match_oracle(spec, built):
    g = built(spec)
    got = sorted(fg.conjugacy_classes(g))
    want = sorted(bf_conjugacy_classes(g.table.tolist(), g.identity))
    assert got == want


# -- normal closures and normal subgroups ------------------------------------

def test_normal_closure_of_identity(built):
    g = built("Q8")
    assert fg.normal_closure(g, g.identity).members == (g.identity,)


def test_normal_closure_of_central_element(built):
    g = built("Q8")
    assert fg.normal_closure(g, 1).members == (0, 1)


def test_normal_closure_of_transposition(built):
    g = built("Perm(3; (0 1), (0 1 2))")
    transposition = next(i for i, o in enumerate(g.element_orders()) if o == 2)
    assert fg.normal_closure(g, transposition).order == 6


def test_normal_subgroup_counts(built):
    assert len(fg.all_normal_subgroups(built("C5"))) == 2
    assert len(fg.all_normal_subgroups(built("Q8"))) == 6
    assert len(fg.all_normal_subgroups(built("Perm(3; (0 1), (0 1 2))"))) == 3


@pytest.mark.parametrize("spec", TINY)
def test_normal_subgroups_match_oracle(spec, built):
    g = built(spec)
    got = [s.members for s in fg.all_normal_subgroups(g)]
    want = bf_normal_subgroups(g.table.tolist(), g.identity)
    assert sorted(got) == sorted(want)


def test_minimal_normals_e32(built):
    minimals = fg.minimal_normal_subgroups(built("E(3,2)"))
    assert len(minimals) == 4
    assert all(s.order == 3 for s in minimals)


def test_minimal_normals_q8(built):
    minimals = fg.minimal_normal_subgroups(built("Q8"))
    assert [s.members for s in minimals] == [(0, 1)]


def test_minimal_normals_aff322_are_the_four_lines(built):
    g = built("Aff(3,2,2)")
    minimals = fg.minimal_normal_subgroups(g)
    assert len(minimals) == 4
    assert all(s.order == 3 for s in minimals)
    # every line sits inside the translation block (indices 0..8)
    assert all(max(s.members) < 9 for s in minimals)


def test_minimal_normals_of_trivial_group(built):
    with pytest.raises(TrivialGroup):
        fg.minimal_normal_subgroups(built("C1"))


def test_minimal_normals_contain_no_smaller_normal(built):
    for spec in TINY:
        g = built(spec)
        if g.order == 1:
            continue
        normals = [set(s.members) for s in fg.all_normal_subgroups(g)
                   if s.order > 1]
        for m in fg.minimal_normal_subgroups(g):
            inside = [n for n in normals if n < set(m.members)]
            assert inside == []


# -- center ------------------------------------------------------------------

def test_center_of_abelian_is_whole(built):
    g = built("C6")
    assert fg.center(g).order == 6


def test_center_q8(built):
    assert fg.center(built("Q8")).members == (0, 1)


def test_center_sym3_trivial(built):
    assert fg.center(built("Perm(3; (0 1), (0 1 2))")).order == 1


@pytest.mark.parametrize("spec", TINY)
def test_center_matches_oracle(spec, built):
    g = built(spec)
    assert fg.center(g).members == bf_center(g.table.tolist())


# -- all_subgroups -----------------------------------------------------------

def test_subgroup_counts(built):
    assert len(fg.all_subgroups(built("C5"))) == 2
    assert len(fg.all_subgroups(built("Q8"))) == 6
    assert len(fg.all_subgroups(built("E(2,2)"))) == 5


@pytest.mark.parametrize("spec", TINY)
def test_all_subgroups_match_oracle(spec, built):
    g = built(spec)
    got = [s.members for s in fg.all_subgroups(g)]
    want = bf_all_subgroups(g.table.tolist(), g.identity)
    assert got == want


def test_all_subgroups_cap(built):
    with pytest.raises(OrderCapExceeded):
        fg.all_subgroups(built("Q8"), cap=4)


def test_lagrange(built):
    for spec in TINY + ["MM(5,2,2,4)", "Aff(3,2,2)"]:
        g = built(spec)
        for sub in fg.all_subgroups(g):
            assert g.order % sub.order == 0


def test_normals_are_subgroups_fixed_by_conjugation(built):
    for spec in TINY:
        g = built(spec)
        all_subs = {s.members for s in fg.all_subgroups(g)}
        for sub in fg.all_normal_subgroups(g):
            assert sub.members in all_subs
            assert fg.is_normal(g, sub)


@pytest.mark.parametrize("spec", ["C2 x C4", "E(2,4)", "Aff(3,2,2)",
                                  "MM(5,2,2,4)", "Perm(4; (0 1), (0 1 2 3))",
                                  "E(2,6)"])
def test_join_closure_complete_up_to_64(spec, built):
    g = built(spec)
    if g.order > 64:
        pytest.skip("only asserted up to order 64")
    via_joins = [s.members for s in fg.all_normal_subgroups(g)]
    via_filter = [s.members for s in fg.all_subgroups(g) if fg.is_normal(g, s)]
    assert sorted(via_joins) == sorted(via_filter)


# -- commutators -------------------------------------------------------------

def test_commutator_subgroup_sym3(built):
    g = built("Perm(3; (0 1), (0 1 2))")
    assert fg.commutator_subgroup(g).order == 3


def test_commutator_subgroup_miller_moreno(built):
    g = built("MM(5,2,2,4)")
    derived = fg.commutator_subgroup(g)
    assert derived.order == 5
    ok, _ = fg.is_cyclic_subgroup(g, derived)
    assert ok


def test_serialization(built):
    sub = fg.center(built("Q8"))
    assert sub.to_json() == {"order": 2, "members": [0, 1]}


def test_subgroup_set_normalizes_members(built):
    g = built("C6")
    sub = fg.SubgroupSet(g, (4, 0, 2, 2))
    assert sub.members == (0, 2, 4)
    assert fg.subgroup_rank(g, sub) == 1
