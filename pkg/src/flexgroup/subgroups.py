"""Subgroup machinery: closure, enumeration, conjugacy, normality, center."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backends
from .core import FiniteGroup, is_normal_members, members_mask
from .errors import IndexOutOfRange, NotASubgroup, OrderCapExceeded, TrivialGroup
from .gengraph import get_graph

SUBGROUP_ENUM_CAP = 256


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup of ``parent`` as a sorted tuple of element indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        normalized = tuple(sorted({int(m) for m in self.members}))
        if normalized != self.members:
            object.__setattr__(self, "members", normalized)

    @property
    def order(self) -> int:
        return len(self.members)

    def mask(self) -> np.ndarray:
        return members_mask(self.parent, self.members)

    def __contains__(self, x: int) -> bool:
        return x in set(self.members)

    def is_proper(self) -> bool:
        return self.order < self.parent.order

    def validate(self) -> None:
        mem = np.asarray(self.members, dtype=np.int64)
        if mem.size == 0:
            raise NotASubgroup("a subgroup must contain the identity")
        closed = backends.closure_mask(self.parent.table, mem, self.parent.identity)
        if not (closed == self.mask()).all():
            raise NotASubgroup(f"member set of size {mem.size} is not closed")

    def to_json(self) -> dict:
        return {"order": self.order, "members": list(self.members)}


def _subgroup_from_mask(group: FiniteGroup, mask: np.ndarray) -> SubgroupSet:
    return SubgroupSet(group, tuple(int(v) for v in np.flatnonzero(mask)))


def closure(group: FiniteGroup, seeds) -> SubgroupSet:
    """Smallest subgroup containing ``seeds``."""
    seeds = [int(s) for s in seeds]
    for s in seeds:
        if not 0 <= s < group.order:
            raise IndexOutOfRange(f"element index {s} not in [0, {group.order})")
    mask = backends.closure_mask(group.table, np.asarray(seeds, dtype=np.int64),
                                 group.identity)
    return _subgroup_from_mask(group, mask)


def is_cyclic_subgroup(group: FiniteGroup, sub: SubgroupSet) -> tuple[bool, int | None]:
    """Whether some member generates the whole subgroup; returns a generator.

    A member m with |<m>| = |S| works because <m> is always contained in the
    closed set S; the least such m is the certificate.
    """
    orders = group.element_orders()
    target = sub.order
    for m in sub.members:
        if int(orders[m]) == target:
            return True, m
    return False, None


def conjugacy_classes(group: FiniteGroup) -> list[tuple[int, ...]]:
    """Orbits of the conjugation action, sorted by least member."""
    table, inv = group.table, group.inverses
    n = group.order
    seen = np.zeros(n, dtype=np.bool_)
    out: list[tuple[int, ...]] = []
    for x in range(n):
        if seen[x]:
            continue
        orbit = np.unique(table[table[:, x], inv])
        seen[orbit] = True
        out.append(tuple(int(v) for v in orbit))
    return out


def conjugacy_class_of(group: FiniteGroup, x: int) -> tuple[int, ...]:
    if not 0 <= x < group.order:
        raise IndexOutOfRange(f"element index {x} not in [0, {group.order})")
    table, inv = group.table, group.inverses
    return tuple(int(v) for v in np.unique(table[table[:, x], inv]))


def normal_closure(group: FiniteGroup, x: int) -> SubgroupSet:
    """Smallest normal subgroup containing x: the closure of its class."""
    return closure(group, conjugacy_class_of(group, x))


def center(group: FiniteGroup) -> SubgroupSet:
    central = (group.table == group.table.T).all(axis=1)
    return _subgroup_from_mask(group, central)


def commutator_subgroup(group: FiniteGroup) -> SubgroupSet:
    """Closure of all commutators x^-1 y^-1 x y."""
    table, inv = group.table, group.inverses
    left = table[np.ix_(inv, inv)]          # x^-1 y^-1
    comms = np.unique(table[left, table])   # (x^-1 y^-1)(x y)
    return closure(group, comms.tolist())


def _normal_closure_atoms(group: FiniteGroup) -> list[np.ndarray]:
    """Distinct member arrays of normal closures of single elements."""
    graph = get_graph(group)
    seen: set[int] = set()
    atoms: list[np.ndarray] = []
    for cls in conjugacy_classes(group):
        sid = graph.closure_state(cls)
        if sid not in seen:
            seen.add(sid)
            atoms.append(graph.members(sid))
    return atoms


def all_normal_subgroups(group: FiniteGroup) -> list[SubgroupSet]:
    """Every normal subgroup, as the join-closure of single-element normal
    closures (every normal subgroup is a join of such closures)."""
    graph = get_graph(group)
    atoms = _normal_closure_atoms(group)
    atom_sids = [graph.state_for_members(a) for a in atoms]
    result = {graph.bottom}
    result.update(atom_sids)
    pending = list(atom_sids)
    while pending:
        sid = pending.pop()
        for a in atoms:
            j = graph.join(sid, a)
            if j not in result:
                result.add(j)
                pending.append(j)
    ordered = sorted(result, key=lambda s: (graph.size(s), tuple(graph.members(s))))
    return [SubgroupSet(group, tuple(int(v) for v in graph.members(s)))
            for s in ordered]


def minimal_normal_subgroups(group: FiniteGroup) -> list[SubgroupSet]:
    """Inclusion-minimal nontrivial normal closures of single elements."""
    if group.order <= 1:
        raise TrivialGroup("the trivial group has no minimal normal subgroups")
    atoms = [a for a in _normal_closure_atoms(group) if a.size > 1]
    out = []
    for a in atoms:
        sa = set(a.tolist())
        if any(b.size < a.size and set(b.tolist()) <= sa for b in atoms):
            continue
        out.append(a)
    out.sort(key=lambda a: (a.size, tuple(a.tolist())))
    return [SubgroupSet(group, tuple(int(v) for v in a)) for a in out]


def all_subgroups(group: FiniteGroup, cap: int = SUBGROUP_ENUM_CAP) -> list[SubgroupSet]:
    """All subgroups, smallest first.

    Built layerwise through the generation graph (cyclic subgroups, then
    joins with one more generator, until fixpoint).  Only permitted up to
    the enumeration cap; nothing else in the package needs the full list.
    """
    if group.order > cap:
        raise OrderCapExceeded(
            f"subgroup enumeration is capped at order {cap}, group has {group.order}"
        )
    graph = get_graph(group)
    return [SubgroupSet(group, tuple(int(v) for v in graph.members(s)))
            for s in graph.all_state_ids_sorted()]


def is_normal(group: FiniteGroup, sub: SubgroupSet) -> bool:
    return is_normal_members(group, sub.members)
