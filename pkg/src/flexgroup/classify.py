"""Structure recognizers and the theorem-verification engine.

Verifiers treat the exhaustive searches as ground truth and the structural
classification as the prediction; every check records both sides so a
disagreement is auditable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import backends
from .core import FiniteGroup, is_prime, quotient
from .errors import (
    OrderCapExceeded,
    RankMismatch,
    RankTooSmall,
    TrivialGroup,
    UnclassifiedStructure,
)
from .flexibility import cycliciser, is_k_flexible, min_generators
from .subgroups import (
    all_normal_subgroups,
    all_subgroups,
    commutator_subgroup,
    is_cyclic_subgroup,
    minimal_normal_subgroups,
    SubgroupSet,
)


class StructureVariant(enum.Enum):
    TRIVIAL = "trivial"
    CYCLIC_PRIME = "cyclic_prime"
    P_SQUARED = "p_squared"
    SCALAR_AFFINE = "scalar_affine"
    Q8 = "q8"
    MILLER_MORENO = "miller_moreno"
    ELEMENTARY_ABELIAN = "elementary_abelian"
    OTHER = "other"


@dataclass(frozen=True)
class StructureTag:
    """Recognized structure with its parameters.

    Rank-2 elementary abelian groups are reported as elementary_abelian(p, 2);
    the p-squared family tests below accept either spelling.
    """

    variant: StructureVariant
    params: tuple[tuple[str, int], ...] = ()

    def param(self, name: str) -> int:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"variant": self.variant.value, "params": dict(self.params)}

    def __str__(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.variant.value}({inner})" if inner else self.variant.value


def _tag(variant: StructureVariant, **params: int) -> StructureTag:
    return StructureTag(variant, tuple(sorted(params.items())))


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _dlog(group: FiniteGroup, base: int, target: int, max_exp: int) -> int | None:
    cur = group.identity
    for e in range(max_exp):
        if cur == target:
            return e
        cur = group.mul(cur, base)
    return None


def _detect_scalar_affine(group: FiniteGroup) -> StructureTag | None:
    """p^r : <g> with g a scalar acting faithfully, detected from any ordering.

    Needs a normal elementary abelian Sylow p-subgroup and a complement
    element h of order m = |G| / p^r with h v h^-1 = v^s for one fixed s and
    every translation v, with ord(s mod p) = m.
    """
    n = group.order
    orders = group.element_orders()
    for p, r in sorted(_factorize(n).items()):
        m = n // p**r
        if m == 1:
            continue
        is_p_elt = np.array([_is_prime_power_of(int(o), p) for o in orders])
        if int(is_p_elt.sum()) != p**r:
            continue
        if int(orders[is_p_elt].max(initial=1)) > p:
            continue  # Sylow p-subgroup not elementary abelian
        sylow = np.flatnonzero(is_p_elt)
        sylow_mask = np.zeros(n, dtype=np.bool_)
        sylow_mask[sylow] = True
        prods = group.table[np.ix_(sylow, sylow)]
        if not sylow_mask[prods].all():
            continue  # p-elements do not form a subgroup
        nontrivial = [int(v) for v in sylow if v != group.identity]
        if not nontrivial:
            continue
        v0 = nontrivial[0]
        for h in range(n):
            if int(orders[h]) != m:
                continue
            s = _dlog(group, v0, group.conj(h, v0), p)
            if s is None or s <= 1:
                continue
            if _multiplicative_order_mod(s, p) != m:
                continue
            if all(group.conj(h, v) == group.power(v, s) for v in nontrivial):
                return _tag(StructureVariant.SCALAR_AFFINE, p=p, r=r, s=s, ord_s=m)
    return None


def _is_prime_power_of(o: int, p: int) -> bool:
    while o % p == 0:
        o //= p
    return o == 1


def _multiplicative_order_mod(s: int, p: int) -> int | None:
    s %= p
    if s == 0:
        return None
    cur, t = s, 1
    while cur != 1:
        cur = (cur * s) % p
        t += 1
    return t


def _detect_miller_moreno(group: FiniteGroup) -> StructureTag | None:
    """Order p*q^m, derived subgroup of order p, every proper subgroup cyclic."""
    n = group.order
    if group.is_abelian():
        return None
    derived = commutator_subgroup(group)
    p = derived.order
    if not is_prime(p) or n % p:
        return None
    rest = n // p
    fac = _factorize(rest)
    if len(fac) != 1:
        return None
    (q, m), = fac.items()
    if q == p:
        return None
    try:
        subs = all_subgroups(group)
    except OrderCapExceeded:
        return None
    for sub in subs:
        if 1 < sub.order < n and not is_cyclic_subgroup(group, sub)[0]:
            return None
    a = min(x for x in derived.members if x != group.identity)
    qm = q**m
    dmask = derived.mask()
    b = None
    for x in range(n):
        # order of the coset xD in the cyclic quotient: least j with x^j in D
        cur = x
        j = 1
        while not dmask[cur]:
            cur = group.mul(cur, x)
            j += 1
        if j == qm:
            b = x
            break
    if b is None:
        return None
    r = _dlog(group, a, group.conj(group.inv(b), a), p)
    if r is None or _multiplicative_order_mod(r, p) != q:
        return None
    return _tag(StructureVariant.MILLER_MORENO, p=p, q=q, m=m, r=r)


def classify_structure(group: FiniteGroup) -> StructureTag:
    """Recognize the classified families; everything else is 'other'."""
    n = group.order
    if n == 1:
        return _tag(StructureVariant.TRIVIAL)
    if is_prime(n):
        return _tag(StructureVariant.CYCLIC_PRIME, p=n)
    if group.is_abelian():
        exp = group.exponent()
        if is_prime(exp):
            fac = _factorize(n)
            if len(fac) == 1 and exp in fac:
                return _tag(StructureVariant.ELEMENTARY_ABELIAN, p=exp, r=fac[exp])
        # fall through: abelian non-elementary groups are not classified
    else:
        orders = group.element_orders()
        if n == 8 and int((orders == 2).sum()) == 1:
            return _tag(StructureVariant.Q8)
        tag = _detect_scalar_affine(group)
        if tag is not None:
            return tag
        tag = _detect_miller_moreno(group)
        if tag is not None:
            return tag
    return _tag(StructureVariant.OTHER)


# ---------------------------------------------------------------------------
# family predicates over tags


def is_p_squared(tag: StructureTag) -> bool:
    if tag.variant is StructureVariant.P_SQUARED:
        return True
    return (tag.variant is StructureVariant.ELEMENTARY_ABELIAN
            and tag.param("r") == 2)


def is_prime_order_affine_line(tag: StructureTag) -> bool:
    """p : <g> with g of prime order: scalar affine, r = 1, ord(s) prime."""
    return (tag.variant is StructureVariant.SCALAR_AFFINE
            and tag.param("r") == 1
            and is_prime(tag.param("ord_s")))


def family_two_flexible_d2(tag: StructureTag) -> bool:
    """The three 2-flexible shapes at rank two: p^2, Q8, minimal nonabelian
    with cyclic subgroups (faithful prime-order lines carry the scalar tag)."""
    return (is_p_squared(tag)
            or tag.variant is StructureVariant.Q8
            or tag.variant is StructureVariant.MILLER_MORENO
            or is_prime_order_affine_line(tag))


def family_one_and_two_flexible_d2(tag: StructureTag) -> bool:
    return is_p_squared(tag) or is_prime_order_affine_line(tag)


def _family_matches_rank(tag: StructureTag, d: int) -> bool:
    """p^r : <g> with a scalar g and r = d - d(<g>); g = 1 means p^r itself."""
    if tag.variant is StructureVariant.ELEMENTARY_ABELIAN:
        return tag.param("r") == d
    if tag.variant is StructureVariant.SCALAR_AFFINE:
        return tag.param("r") == d - 1
    return False


def predict_profile(tag: StructureTag, d: int) -> dict[int, bool]:
    """Flexibility predictions from the structure tag of the group itself.

    Covers exactly the classified families; raises UnclassifiedStructure for
    'other' tags, in which case callers fall back to the exhaustive search.
    For d = 2 both k = 1 and k = 2 are predicted; for d >= 3 the classified
    groups are k-flexible for every k < d.
    """
    if tag.variant is StructureVariant.OTHER:
        raise UnclassifiedStructure(f"no prediction for {tag} at d={d}")
    if d <= 0:
        return {}
    if d == 1:
        if tag.variant in (StructureVariant.CYCLIC_PRIME, StructureVariant.TRIVIAL):
            return {1: True}
        raise UnclassifiedStructure(f"no rank-1 prediction for {tag}")
    if d == 2:
        two = family_two_flexible_d2(tag)
        if is_p_squared(tag):
            one = True
        elif tag.variant is StructureVariant.SCALAR_AFFINE and tag.param("r") == 1:
            one = True  # faithful affine lines always extend single elements
        elif tag.variant in (StructureVariant.Q8, StructureVariant.MILLER_MORENO):
            one = False
        else:
            raise UnclassifiedStructure(f"no rank-2 prediction for {tag}")
        return {1: one, 2: two}
    if _family_matches_rank(tag, d):
        return {k: True for k in range(1, d)}
    raise UnclassifiedStructure(f"no rank-{d} prediction for {tag}")


# ---------------------------------------------------------------------------
# verification reports


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    observed: object
    agree: bool
    details: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "observed": self.observed,
            "agree": self.agree,
            "details": self.details,
        }


def _check(name: str, expected, observed, details: str = "") -> Check:
    return Check(name, expected, observed, expected == observed, details)


def _not_applicable(name: str, why: str) -> Check:
    return Check(name, "n/a", "n/a", True, f"not applicable: {why}")


@dataclass(frozen=True)
class TheoremReport:
    group: str
    order: int
    checks: tuple[Check, ...]
    note: str = ""

    @property
    def all_agree(self) -> bool:
        return all(c.agree for c in self.checks)

    def disagreements(self) -> list[Check]:
        return [c for c in self.checks if not c.agree]

    def to_json(self) -> dict:
        doc = {
            "group": self.group,
            "order": self.order,
            "checks": [c.to_json() for c in self.checks],
        }
        if self.note:
            doc["note"] = self.note
        return doc


def _quotient_rank(group: FiniteGroup, sub: SubgroupSet) -> int:
    q, _ = quotient(group, sub)
    return min_generators(q).d


def verify_thm_1_flexible(group: FiniteGroup, name: str = "",
                          all_normals: bool = False,
                          symmetry_reduction: bool = False) -> TheoremReport:
    """Brute-force 1-flexibility against the quotient-rank condition.

    The condition quantifies over minimal normal subgroups: any nontrivial
    normal subgroup contains a minimal one and quotient rank only drops
    under further quotienting.  ``all_normals`` forces the unreduced sweep.
    """
    name = name or group.origin
    if group.order == 1:
        raise TrivialGroup("1-flexibility condition is about nontrivial groups")
    d = min_generators(group).d
    observed = is_k_flexible(group, 1,
                             symmetry_reduction=symmetry_reduction).flexible
    if all_normals:
        normals = [s for s in all_normal_subgroups(group) if s.order > 1]
    else:
        normals = minimal_normal_subgroups(group)
    ranks = {s.members: _quotient_rank(group, s) for s in normals}
    expected = all(r < d for r in ranks.values())
    details = (f"d(G)={d}; quotient ranks over "
               f"{'all' if all_normals else 'minimal'} normals: "
               f"{sorted((len(m), r) for m, r in ranks.items())}")
    return TheoremReport(name, group.order, (
        _check("one_flexible_vs_quotient_rank", expected, observed, details),
    ))


def verify_thm_2_flexible(group: FiniteGroup, name: str = "",
                          symmetry_reduction: bool = False) -> TheoremReport:
    """Pairwise agreement of, for d(G) >= 3:
    (i) 2-flexible; (ii) k-flexible for 2 <= k < d; (iii) G/Cyc(G) is a
    scalar affine p^r : <g> with r = d - d(<g>)."""
    name = name or group.origin
    d = min_generators(group).d
    if d < 3:
        raise RankTooSmall(f"theorem requires d(G) >= 3, got {d}")

    def flex(h, k):
        return is_k_flexible(h, k, symmetry_reduction=symmetry_reduction)

    cond_i = flex(group, 2).flexible
    cond_ii = all(flex(group, k).flexible for k in range(2, d))
    cyc = cycliciser(group)
    q, _ = quotient(group, SubgroupSet(group, cyc.members))
    tag_q = classify_structure(q)
    cond_iii = _family_matches_rank(tag_q, d)
    details = (f"d={d}; |Cyc|={cyc.order}; G/Cyc tag: {tag_q}; "
               f"d(G/Cyc)={min_generators(q).d}")
    return TheoremReport(name, group.order, (
        _check("two_flexible_vs_structure", cond_iii, cond_i, details),
        _check("all_mid_k_vs_structure", cond_iii, cond_ii, details),
        _check("two_flexible_vs_all_mid_k", cond_ii, cond_i, details),
    ))


def verify_d2_case(group: FiniteGroup, name: str = "",
                   symmetry_reduction: bool = False) -> TheoremReport:
    """The rank-two classification: 2-flexible <=> every proper subgroup is
    cyclic <=> tag in {p^2, Q8, Miller-Moreno}; and 1-and-2-flexible <=>
    p^2 or p : <g> with g of prime order."""
    name = name or group.origin
    d = min_generators(group).d
    if d != 2:
        raise RankMismatch(f"check requires d(G) = 2, got {d}")
    brute2 = is_k_flexible(group, 2,
                           symmetry_reduction=symmetry_reduction).flexible
    verdict1 = is_k_flexible(group, 1, symmetry_reduction=symmetry_reduction)
    proper_cyclic = all(
        is_cyclic_subgroup(group, s)[0]
        for s in all_subgroups(group) if s.order < group.order
    )
    tag = classify_structure(group)
    fam2 = family_two_flexible_d2(tag)
    fam12 = family_one_and_two_flexible_d2(tag)
    both = verdict1.flexible and brute2
    cex = ""
    if verdict1.counterexample is not None:
        idx = verdict1.counterexample[0]
        cex = f"; k=1 counterexample: index {idx} ({group.labels[idx]})"
    details = f"tag: {tag}{cex}"
    return TheoremReport(name, group.order, (
        _check("two_flexible_vs_proper_subgroups_cyclic",
               proper_cyclic, brute2, details),
        _check("two_flexible_vs_structure_family", fam2, brute2, details),
        _check("proper_subgroups_cyclic_vs_structure_family",
               fam2, proper_cyclic, details),
        _check("one_and_two_flexible_vs_prime_order_family",
               fam12, both, details),
    ))


def _triple_cyclic_holds(group: FiniteGroup, exhaustive_limit: int = 24,
                         samples: int = 10_000, seed: int = 0x5EED) -> tuple[bool, str]:
    """<x,y>, <x,z>, <y,z> all cyclic forces <x,y,z> cyclic.

    Exhaustive below the limit; seeded random triples above it.
    """
    mem = group.cyclic_membership()
    pair = backends.pair_cyclic_matrix(mem)
    n = group.order

    def triple_ok(x: int, y: int, z: int) -> bool:
        if not (pair[x, y] and pair[x, z] and pair[y, z]):
            return True
        return bool((mem[:, x] & mem[:, y] & mem[:, z]).any())

    if n <= exhaustive_limit:
        checked = 0
        for x in range(n):
            for y in range(x + 1, n):
                if not pair[x, y]:
                    continue
                for z in range(y + 1, n):
                    checked += 1
                    if not triple_ok(x, y, z):
                        return False, f"violated at ({x},{y},{z})"
        return True, f"exhaustive over {n}^3 triples"
    rng = np.random.default_rng(seed)
    triples = rng.integers(0, n, size=(samples, 3))
    for x, y, z in triples:
        if not triple_ok(int(x), int(y), int(z)):
            return False, f"violated at ({x},{y},{z})"
    return True, f"{samples} seeded random triples"


def verify_lemma_suite(group: FiniteGroup, name: str = "",
                       symmetry_reduction: bool = False) -> TheoremReport:
    """Every applicable quotient/cycliciser lemma, plus the triple-cyclic
    property, aggregated into one report."""
    name = name or group.origin
    checks: list[Check] = []
    d = min_generators(group).d
    n = group.order

    cyc = cycliciser(group)
    cyc_sub = SubgroupSet(group, cyc.members)
    q_cyc, _ = quotient(group, cyc_sub)

    def flex(h, k):
        return is_k_flexible(h, k, symmetry_reduction=symmetry_reduction)

    flexible_ks = [k for k in range(1, d + 1) if flex(group, k).flexible]

    # quotient lemma: k-flexibility descends to quotients of equal rank
    transfers_ok = True
    transfer_count = 0
    minimality_ok = True
    for sub in all_normal_subgroups(group):
        if sub.order == 1:
            continue  # identity quotient, transfer is vacuous
        q, _ = quotient(group, sub)
        if cycliciser(q).order == 1 and not all(m in set(sub.members)
                                                for m in cyc.members):
            minimality_ok = False
        if min_generators(q).d != d:
            continue
        for k in flexible_ks:
            transfer_count += 1
            if not flex(q, k).flexible:
                transfers_ok = False
    checks.append(_check("quotient_preserves_flexibility", True, transfers_ok,
                         f"{transfer_count} (quotient, k) pairs with equal rank"))

    checks.append(_check("cycliciser_of_quotient_trivial", True,
                         cycliciser(q_cyc).order == 1,
                         f"|Cyc(G)|={cyc.order}"))
    checks.append(_check("cycliciser_minimality", True, minimality_ok,
                         "Cyc(G/N) trivial forces Cyc(G) <= N, all normal N"))

    if d >= 2:
        checks.append(_check("rank_preserved_mod_cycliciser", True,
                             min_generators(q_cyc).d == d,
                             f"d(G/Cyc)={min_generators(q_cyc).d}, d(G)={d}"))
    else:
        checks.append(_not_applicable("rank_preserved_mod_cycliciser",
                                      f"d(G) = {d} < 2"))

    if d >= 3:
        mid_ok = all(
            flex(group, k).flexible == flex(q_cyc, k).flexible
            for k in range(2, d)
        )
        checks.append(_check("mid_k_flexibility_matches_cycliciser_quotient",
                             True, mid_ok, f"k in [2, {d - 1}]"))
    else:
        checks.append(_not_applicable("mid_k_flexibility_matches_cycliciser_quotient",
                                      f"d(G) = {d} < 3"))

    two_flexible = d >= 2 and flex(group, 2).flexible
    if two_flexible:
        one_flex = flex(group, 1).flexible
        checks.append(_check("one_flexible_iff_cycliciser_trivial", True,
                             one_flex == (cyc.order == 1),
                             f"1-flexible={one_flex}, |Cyc|={cyc.order}"))
        checks.append(_check("cycliciser_quotient_one_flexible", True,
                             flex(q_cyc, 1).flexible, ""))
    else:
        why = f"d(G) = {d} < 2" if d < 2 else "G is not 2-flexible"
        checks.append(_not_applicable("one_flexible_iff_cycliciser_trivial", why))
        checks.append(_not_applicable("cycliciser_quotient_one_flexible", why))

    if d >= 3 and two_flexible:
        minimals = minimal_normal_subgroups(group)
        all_cyc = all(is_cyclic_subgroup(group, s)[0] for s in minimals)
        checks.append(_check("minimal_normals_cyclic", True, all_cyc,
                             f"{len(minimals)} minimal normal subgroups"))
    else:
        checks.append(_not_applicable(
            "minimal_normals_cyclic",
            f"d(G) = {d} < 3" if d < 3 else "G is not 2-flexible"))

    ok, info = _triple_cyclic_holds(group)
    checks.append(_check("triple_cyclic_closure", True, ok, info))

    return TheoremReport(name, n, tuple(checks))
