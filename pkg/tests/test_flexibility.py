import pytest

import flexgroup as fg
from flexgroup.errors import KOutOfRange, NotASubgroup, PreconditionViolated
from flexgroup.gengraph import get_graph, iter_rank_k_subsets

from bruteforce import (
    bf_cycliciser,
    bf_is_k_flexible,
    bf_min_generators,
    bf_subgroup_rank,
)
from conftest import ORACLE_SPECS


# -- min_generators -----------------------------------------------------------

def test_rank_examples(built):
    assert fg.min_generators(built("C6")).d == 1
    assert fg.min_generators(built("C5")).d == 1
    assert fg.min_generators(built("E(3,2)")).d == 2
    assert fg.min_generators(built("Aff(3,2,2)")).d == 3
    assert fg.min_generators(built("Q8")).d == 2


def test_rank_of_trivial_group(built):
    assert fg.min_generators(built("C1")) == fg.RankResult(0, ())


def test_q8_witness_is_first_pair(built):
    g = built("Q8")
    assert fg.min_generators(g).witness == (2, 4)  # (i, j)


@pytest.mark.parametrize("spec", ORACLE_SPECS)
def test_rank_and_witness_match_oracle(spec, built):
    g = built(spec)
    d, witness = bf_min_generators(g.table.tolist(), g.identity)
    got = fg.min_generators(g)
    assert got.d == d
    assert got.witness == witness


@pytest.mark.parametrize("spec", ["Q8", "E(3,2)", "Aff(3,2,2)", "C2 x C4"])
def test_witness_is_irredundant(spec, built):
    g = built(spec)
    witness = fg.min_generators(g).witness
    assert fg.closure(g, witness).order == g.order
    for drop in range(len(witness)):
        reduced = witness[:drop] + witness[drop + 1:]
        assert fg.closure(g, reduced).order < g.order


# -- subgroup_rank ------------------------------------------------------------

def test_subgroup_rank_trivial(built):
    g = built("C6")
    assert fg.subgroup_rank(g, fg.closure(g, [])) == 0


def test_subgroup_rank_cyclic(built):
    g = built("C6")
    assert fg.subgroup_rank(g, fg.closure(g, [2])) == 1


def test_subgroup_rank_klein_inside_c2xc4(built):
    g = built("C2 x C4")
    klein = fg.closure(g, [4, 2])  # (1,0) and (0,2)
    assert klein.order == 4
    assert fg.subgroup_rank(g, klein) == 2


def test_subgroup_rank_rejects_non_subgroup(built):
    g = built("C6")
    with pytest.raises(NotASubgroup):
        fg.subgroup_rank(g, fg.SubgroupSet(g, (0, 2)))


@pytest.mark.parametrize("spec", ["Q8", "C2 x C4", "Perm(3; (0 1), (0 1 2))"])
def test_subgroup_rank_matches_oracle_and_graph(spec, built):
    g = built(spec)
    graph = get_graph(g)
    for sub in fg.all_subgroups(g):
        want = bf_subgroup_rank(g.table.tolist(), g.identity, sub.members)
        assert fg.subgroup_rank(g, sub) == want
        assert graph.depth(graph.state_for_members(sub.members)) == want


# -- cycliciser ---------------------------------------------------------------

def test_cycliciser_of_cyclic_group_is_everything(built):
    g = built("C12")
    assert fg.cycliciser(g).order == 12


def test_cycliciser_of_vector_group_is_trivial(built):
    assert fg.cycliciser(built("E(3,2)")).order == 1
    assert fg.cycliciser(built("E(2,3)")).order == 1


def test_cycliciser_q8_is_center(built):
    got = fg.cycliciser(built("Q8"))
    assert got.members == (0, 1)
    assert got.generator == 1


def test_cycliciser_sym3_trivial(built):
    assert fg.cycliciser(built("Perm(3; (0 1), (0 1 2))")).order == 1


def test_cycliciser_nontrivial_in_coprime_product(built):
    g = built("Aff(3,2,2) x C5")
    assert fg.cycliciser(g).order == 5


@pytest.mark.parametrize("spec", ORACLE_SPECS)
def test_cycliciser_matches_oracle(spec, built):
    g = built(spec)
    assert fg.cycliciser(g).members == bf_cycliciser(g.table.tolist(), g.identity)


# -- is_k_flexible ------------------------------------------------------------

def test_k_out_of_range(built):
    g = built("Q8")
    with pytest.raises(KOutOfRange):
        fg.is_k_flexible(g, 0)
    with pytest.raises(KOutOfRange):
        fg.is_k_flexible(g, 3)


def test_vector_group_flexible_everywhere(built):
    g = built("E(2,3)")
    for k in (1, 2, 3):
        assert fg.is_k_flexible(g, k).flexible


def test_q8_profile(built):
    g = built("Q8")
    v1 = fg.is_k_flexible(g, 1)
    assert not v1.flexible
    assert v1.counterexample == (1,)          # the central involution
    assert fg.is_k_flexible(g, 2).flexible


def test_affine_two_flexible(built):
    assert fg.is_k_flexible(built("Aff(3,2,2)"), 2).flexible


def test_c2xc4_not_two_flexible(built):
    v = fg.is_k_flexible(built("C2 x C4"), 2)
    assert not v.flexible
    assert v.counterexample is not None


@pytest.mark.parametrize("spec", ORACLE_SPECS)
def test_flexibility_matches_oracle(spec, built):
    g = built(spec)
    d = fg.min_generators(g).d
    for k in range(1, d + 1):
        want_flexible, want_cex = bf_is_k_flexible(
            g.table.tolist(), g.identity, k, d)
        got = fg.is_k_flexible(g, k)
        assert got.flexible == want_flexible, (spec, k)
        assert got.counterexample == want_cex, (spec, k)


def test_counterexample_certificate(built):
    g = built("C2 x C4")
    v = fg.is_k_flexible(g, 2)
    sub = fg.closure(g, v.counterexample)
    assert fg.subgroup_rank(g, sub) == 2
    # k = d(G) here, so the extension is empty and failure means properness
    assert sub.order < g.order


def test_witness_map_extensions_generate(built):
    for spec in ["E(2,3)", "Aff(3,2,2)", "Q8"]:
        g = built(spec)
        d = fg.min_generators(g).d
        for k in range(1, d + 1):
            v = fg.is_k_flexible(g, k)
            if not v.flexible:
                continue
            assert v.witness_map
            for tup, ext in v.witness_map:
                assert len(ext) == d - k
                assert fg.closure(g, tup + ext).order == g.order


@pytest.mark.parametrize("spec", ORACLE_SPECS)
def test_symmetry_reduction_agrees(spec, built):
    g = built(spec)
    if g.order > 24:
        pytest.skip("agreement asserted on order <= 24")
    d = fg.min_generators(g).d
    for k in range(1, d + 1):
        plain = fg.is_k_flexible(g, k)
        reduced = fg.is_k_flexible(g, k, symmetry_reduction=True)
        assert plain.flexible == reduced.flexible
        assert plain.counterexample == reduced.counterexample


def test_profile_shape(built):
    g = built("Aff(3,2,2)")
    profile = fg.flexibility_profile(g)
    assert [v.k for v in profile] == [1, 2, 3]
    assert all(v.flexible for v in profile)


def test_profile_of_trivial_group_is_empty(built):
    assert fg.flexibility_profile(built("C1")) == []


def test_quotient_rank_monotone(built):
    for spec in ["Q8", "C2 x C4", "MM(5,2,2,4)", "Aff(3,2,2)"]:
        g = built(spec)
        d = fg.min_generators(g).d
        for sub in fg.all_normal_subgroups(g):
            q, _ = fg.quotient(g, sub)
            assert fg.min_generators(q).d <= d


# -- serialization ------------------------------------------------------------

def test_verdict_json_shapes(built):
    g = built("Q8")
    v1 = fg.is_k_flexible(g, 1).to_json()
    assert v1 == {"k": 1, "flexible": False, "counterexample": [1]}
    v2 = fg.is_k_flexible(g, 2).to_json()
    assert v2["k"] == 2 and v2["flexible"] is True and "witness" in v2
    rank = fg.min_generators(g).to_json()
    assert rank == {"d": 2, "witness": [2, 4]}
    cyc = fg.cycliciser(g).to_json()
    assert cyc == {"members": [0, 1], "generator": 1}


# -- constructive extension ---------------------------------------------------

def test_constructive_extension_empty_tuple(built):
    g = built("Aff(3,2,2)")
    ext = fg.constructive_affine_extension(g, ())
    assert len(ext) == 3
    assert fg.closure(g, ext).order == g.order


def test_constructive_extension_exhaustive_aff322(built):
    g = built("Aff(3,2,2)")
    graph = get_graph(g)
    d = fg.min_generators(g).d
    for k in (1, 2):
        for subset, _ in iter_rank_k_subsets(graph, k):
            ext = fg.constructive_affine_extension(g, subset)
            assert len(ext) == d - k
            assert fg.closure(g, subset + ext).order == g.order


def test_constructive_extension_dependent_translation_parts(built):
    # entries (e1, g) and (2*e1, g) force the complement choice to matter
    g = built("Aff(3,2,2)")
    tup = (9 + 3, 9 + 6)  # (1,0)g and (2,0)g
    assert fg.subgroup_rank(g, fg.closure(g, tup)) == 2
    ext = fg.constructive_affine_extension(g, tup)
    assert fg.closure(g, tup + ext).order == g.order


def test_constructive_extension_preconditions(built):
    with pytest.raises(PreconditionViolated):
        fg.constructive_affine_extension(built("Q8"), ())
    with pytest.raises(PreconditionViolated):
        fg.constructive_affine_extension(built("E(3,2)"), ())
    g = built("Aff(3,2,2)")
    witness = fg.min_generators(g).witness  # rank 3 > r = 2
    with pytest.raises(PreconditionViolated):
        fg.constructive_affine_extension(g, witness)
    with pytest.raises(PreconditionViolated):
        fg.constructive_affine_extension(g, (1, 2))  # rank 1, size 2


def test_closure_random_seeds_match_oracle_midsize(built):
    from bruteforce import bf_closure
    import numpy as np

    rng = np.random.default_rng(2024)
    for spec in ["MM(13,3,1,3)", "Aff(5,2,4)"]:
        g = built(spec)
        table = g.table.tolist()
        for _ in range(25):
            seeds = [int(v) for v in rng.integers(0, g.order, size=2)]
            got = fg.closure(g, seeds).members
            want = tuple(sorted(bf_closure(table, g.identity, seeds)))
            assert got == want


def test_relabeling_invariance(built):
    """Analysis results do not depend on how elements are numbered."""
    import numpy as np

    base = built("MM(5,2,2,4)")
    rng = np.random.default_rng(7)
    perm = rng.permutation(base.order)          # new_index = perm[old_index]
    inv_perm = np.argsort(perm)
    shuffled = perm[base.table[np.ix_(inv_perm, inv_perm)]]
    relabeled = fg.from_cayley_table(shuffled)

    assert fg.min_generators(relabeled).d == fg.min_generators(base).d
    assert fg.cycliciser(relabeled).order == fg.cycliciser(base).order
    base_tag = fg.classify_structure(base)
    new_tag = fg.classify_structure(relabeled)
    assert new_tag == base_tag
    for k in (1, 2):
        assert (fg.is_k_flexible(relabeled, k).flexible
                == fg.is_k_flexible(base, k).flexible)
    # the canonical counterexample maps through the relabeling up to choice:
    # both name a central element of order 2
    cex = fg.is_k_flexible(relabeled, 1).counterexample
    assert cex is not None
    assert relabeled.element_order(cex[0]) == 2
    assert cex[0] in set(fg.center(relabeled).members)
