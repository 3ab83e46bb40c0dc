import pytest

import flexgroup as fg
from flexgroup.catalog import filter_entries, load_catalog


@pytest.fixture(scope="module")
def entries():
    return load_catalog()


def test_catalog_size(entries):
    assert len(entries) >= 40


def test_names_unique(entries):
    names = [e.name for e in entries]
    assert len(names) == len(set(names))


def test_specs_parse(entries):
    for e in entries:
        fg.parse_spec(e.spec)


def test_orders_match_built_groups(entries, built):
    for e in entries:
        assert built(e.spec).order == e.order, e.name


def test_expected_d_matches(entries, built):
    for e in entries:
        if e.expected_d is None:
            continue
        assert fg.min_generators(built(e.spec)).d == e.expected_d, e.name


def test_max_order_filter(entries):
    small = filter_entries(entries, max_order=8)
    names = {e.name for e in small}
    for want in ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8",
                 "E(2,2)", "E(2,3)", "Q8", "D8"]:
        assert want in names
    assert all(e.order <= 8 for e in small)


def test_tag_filter(entries):
    affine = filter_entries(entries, tags=["affine"])
    assert affine
    assert all("affine" in e.tags for e in affine)
    assert {e.name for e in affine} >= {"Aff(3,2,2)", "MatAff(2,2,x^2+x+1)"}


def test_default_sweep_excludes_large(entries):
    capped = filter_entries(entries, max_order=128)
    assert "Aff(3,4,2)" not in {e.name for e in capped}
    assert "Aff(3,4,2)" in {e.name for e in entries}


def test_theorem_branch_coverage(entries, built):
    """The manifest covers every classification branch at desk scale."""
    d_values = set()
    tags_seen = set()
    for e in entries:
        if e.order > 128 or e.expected_d is None:
            continue
        d_values.add(e.expected_d)
        if e.expected_d == 2:
            tags_seen.add(fg.classify_structure(built(e.spec)).variant)
    assert {0, 1, 2, 3} <= d_values
    from flexgroup.classify import StructureVariant as V
    assert {V.ELEMENTARY_ABELIAN, V.Q8, V.MILLER_MORENO,
            V.SCALAR_AFFINE, V.OTHER} <= tags_seen
