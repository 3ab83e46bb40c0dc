"""Catalog-wide verification suites with deterministic reports.

Each suite maps catalog entries to ``TheoremReport`` documents.  Work is
parallelized across entries with threads (the closure kernels release the
GIL); results are assembled in manifest order so reports are byte-identical
for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .catalog import CatalogEntry, filter_entries, load_catalog
from .classify import (
    Check,
    TheoremReport,
    verify_d2_case,
    verify_lemma_suite,
    verify_thm_1_flexible,
    verify_thm_2_flexible,
)
from .core import FiniteGroup
from .flexibility import (
    constructive_affine_extension,
    cycliciser,
    is_k_flexible,
    min_generators,
)
from .gengraph import get_graph, iter_rank_k_subsets
from .specs import parse_group_spec

SUITE_NAMES = ("thm1", "thm2", "d2", "lemmas", "examples")
_EXHAUSTIVE_EXTENSION_LIMIT = 32
_SAMPLED_EXTENSION_COUNT = 200
_SAMPLE_SEED = 0xA44E


def _check(name: str, expected, observed, details: str = "") -> Check:
    return Check(name, expected, observed, expected == observed, details)


def _skip(entry: CatalogEntry, why: str) -> TheoremReport:
    return TheoremReport(entry.name, entry.order, (), note=f"skipped: {why}")


def sample_rank_k_tuples(group: FiniteGroup, count: int, max_k: int,
                         seed: int = _SAMPLE_SEED) -> list[tuple[int, ...]]:
    """Seeded random tuples of distinct elements whose rank equals their size."""
    graph = get_graph(group)
    rng = np.random.default_rng(seed)
    out: list[tuple[int, ...]] = []
    while len(out) < count:
        k = int(rng.integers(1, max_k + 1))
        tup = tuple(sorted(int(v) for v in
                           rng.choice(group.order, size=k, replace=False)))
        sid = graph.closure_state(tup)
        if graph.depth(sid) == k:
            out.append(tup)
    return out


def _extension_checks(group: FiniteGroup, r: int, d: int) -> tuple[bool, str]:
    if group.order <= _EXHAUSTIVE_EXTENSION_LIMIT:
        graph = get_graph(group)
        for k in range(0, r + 1):
            subsets = [()] if k == 0 else [s for s, _ in iter_rank_k_subsets(graph, k)]
            for subset in subsets:
                if len(constructive_affine_extension(group, subset)) != d - k:
                    return False, f"wrong extension size for {subset}"
        return True, "exhaustive over rank-k tuples, k <= r"
    tuples = sample_rank_k_tuples(group, _SAMPLED_EXTENSION_COUNT, r)
    for tup in tuples:
        if len(constructive_affine_extension(group, tup)) != d - len(tup):
            return False, f"wrong extension size for {tup}"
    return True, f"{_SAMPLED_EXTENSION_COUNT} seeded random rank-k tuples"


def _suite_thm2(entry: CatalogEntry, group: FiniteGroup,
                symmetry_reduction: bool = False) -> TheoremReport:
    if min_generators(group).d < 3:
        return _skip(entry, f"d(G) = {min_generators(group).d} < 3")
    return verify_thm_2_flexible(group, name=entry.name,
                                 symmetry_reduction=symmetry_reduction)


def _suite_d2(entry: CatalogEntry, group: FiniteGroup,
              symmetry_reduction: bool = False) -> TheoremReport:
    if min_generators(group).d != 2:
        return _skip(entry, f"d(G) = {min_generators(group).d} != 2")
    return verify_d2_case(group, name=entry.name,
                          symmetry_reduction=symmetry_reduction)


def _suite_examples(entry: CatalogEntry, group: FiniteGroup) -> TheoremReport:
    """Worked-example facts: ranks of the classified families, the Q8
    profile, and the constructive extension inside scalar affine groups."""
    checks: list[Check] = []
    d = min_generators(group).d
    meta = group._meta
    ctor = meta.get("constructor")

    if entry.expected_d is not None:
        checks.append(_check("expected_rank", entry.expected_d, d, entry.d_note))

    if ctor == "elementary_abelian":
        checks.append(_check("rank_equals_dimension", meta["r"], d))
        profile_ok = all(is_k_flexible(group, k).flexible for k in range(1, d + 1))
        checks.append(_check("flexible_at_every_k", True, profile_ok,
                             f"k = 1..{d}"))
    elif ctor == "scalar_affine" and meta.get("s") != 1:
        r = meta["r"]
        checks.append(_check("rank_equals_dimension_plus_one", r + 1, d))
        profile_ok = all(is_k_flexible(group, k).flexible for k in range(1, r + 1))
        checks.append(_check("flexible_up_to_dimension", True, profile_ok,
                             f"k = 1..{r}; k = d(G) recorded separately"))
        ext_ok, how = _extension_checks(group, r, d)
        checks.append(_check("constructive_extension_closes", True, ext_ok, how))
    elif ctor == "quaternion8":
        v1 = is_k_flexible(group, 1)
        v2 = is_k_flexible(group, 2)
        cyc = cycliciser(group)
        checks.append(_check("rank", 2, d))
        checks.append(_check("not_one_flexible", False, v1.flexible))
        checks.append(_check(
            "central_involution_is_counterexample", "-1",
            group.labels[v1.counterexample[0]] if v1.counterexample else None))
        checks.append(_check("two_flexible", True, v2.flexible))
        checks.append(_check("cycliciser_order", 2, cyc.order))

    if not checks:
        return _skip(entry, "no example facts for this entry")
    return TheoremReport(entry.name, group.order, tuple(checks))


def run_suite(suite: str, entries: list[CatalogEntry], *, jobs: int = 1,
              all_normals: bool = False, symmetry_reduction: bool = False,
              order_cap: int | None = None) -> dict:
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; have {SUITE_NAMES}")

    def work(entry: CatalogEntry) -> dict:
        group = entry.build(order_cap=order_cap)
        if suite == "thm1":
            if group.order == 1:
                return _skip(entry, "trivial group").to_json()
            return verify_thm_1_flexible(
                group, name=entry.name, all_normals=all_normals,
                symmetry_reduction=symmetry_reduction).to_json()
        if suite == "thm2":
            return _suite_thm2(entry, group, symmetry_reduction).to_json()
        if suite == "d2":
            return _suite_d2(entry, group, symmetry_reduction).to_json()
        if suite == "lemmas":
            return verify_lemma_suite(
                group, name=entry.name,
                symmetry_reduction=symmetry_reduction).to_json()
        return _suite_examples(entry, group).to_json()

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(work, entries))
    else:
        reports = [work(e) for e in entries]

    checks = sum(len(r["checks"]) for r in reports)
    disagreements = sum(1 for r in reports for c in r["checks"] if not c["agree"])
    return {
        "suite": suite,
        "groups": reports,
        "summary": {
            "entries": len(reports),
            "checks": checks,
            "disagreements": disagreements,
        },
    }


def run_verification(suite: str, *, max_order: int = 128, jobs: int = 1,
                     spec: str | None = None, all_normals: bool = False,
                     symmetry_reduction: bool = False,
                     order_cap: int | None = None) -> dict:
    """Run one suite or "all"; returns the JSON document (schema 1)."""
    if spec is not None:
        group = parse_group_spec(spec, order_cap=order_cap)
        entries = [CatalogEntry(name=spec, spec=spec, order=group.order)]
    else:
        entries = filter_entries(load_catalog(), max_order=max_order)
    suites = list(SUITE_NAMES) if suite == "all" else [suite]
    suite_docs = [
        run_suite(s, entries, jobs=jobs, all_normals=all_normals,
                  symmetry_reduction=symmetry_reduction, order_cap=order_cap)
        for s in suites
    ]
    disagreements = sum(d["summary"]["disagreements"] for d in suite_docs)
    return {
        "schema": 1,
        "suite": suite,
        "max_order": None if spec is not None else max_order,
        "all_normals": all_normals,
        "suites": suite_docs,
        "summary": {
            "checks": sum(d["summary"]["checks"] for d in suite_docs),
            "disagreements": disagreements,
        },
    }
