import numpy as np
import pytest

from flexgroup import backends

SPECS = ["C12", "Q8", "E(3,2)", "Perm(4; (0 1), (0 1 2 3))", "MM(5,2,2,4)"]

NONASSOC = [[0, 1, 2], [1, 1, 0], [2, 0, 2]]


def test_both_backends_present():
    assert backends.available_backends() == ("numba", "numpy")


def test_default_backend_prefers_numba():
    assert backends.get_backend() in backends.available_backends()


def test_set_backend_rejects_unknown():
    with pytest.raises(ValueError):
        backends.set_backend("fortran")


@pytest.mark.parametrize("spec", SPECS)
def test_kernel_twins_agree(spec, built):
    g = built(spec)
    per_backend = {}
    for name in backends.available_backends():
        with backends.use_backend(name):
            mem = backends.cyclic_membership(g.table, g.identity)
            per_backend[name] = {
                "closure": backends.closure_mask(
                    g.table, np.array([1, g.order - 1], dtype=np.int64),
                    g.identity).tolist(),
                "extend": backends.closure_extend(
                    g.table, np.array([g.identity], dtype=np.int64), 1).tolist(),
                "membership": mem.tolist(),
                "orders": backends.element_orders(g.table, g.identity).tolist(),
                "pairs": backends.pair_cyclic_matrix(mem).tolist(),
                "cyc": backends.cycliciser_mask(mem).tolist(),
            }
    assert per_backend["numba"] == per_backend["numpy"]


def test_light_violation_same_triple_both_backends():
    table = np.array(NONASSOC, dtype=np.int32)
    gens = np.array([1, 2], dtype=np.int64)
    hits = []
    for name in backends.available_backends():
        with backends.use_backend(name):
            hits.append(backends.light_violation(table, gens))
    assert hits[0] == hits[1]
    a, g, c = hits[0]
    assert table[table[a, g], c] != table[a, table[g, c]]


def test_light_violation_none_on_group(built):
    g = built("C12")
    gens = np.arange(g.order, dtype=np.int64)
    for name in backends.available_backends():
        with backends.use_backend(name):
            assert backends.light_violation(g.table, gens) is None


def test_use_backend_restores_previous():
    before = backends.get_backend()
    with backends.use_backend("numpy"):
        assert backends.get_backend() == "numpy"
    assert backends.get_backend() == before
