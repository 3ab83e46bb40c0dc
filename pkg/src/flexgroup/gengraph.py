"""Memoized generation graph over a group's subgroups.

States are subgroups, interned by membership mask.  The single transition
``ext(H, x) = <H u {x}>`` is the only closure primitive the searches need:

* level BFS from the trivial subgroup assigns ``depth(H) = d(H)``, the
  minimal number of generators of H (closures of j-element subsets are
  exactly the subgroups of rank <= j);
* a reverse pass over the fully expanded graph assigns ``dist(H)``, the
  minimal number of extra generators needed to grow H to the whole group.

min_generators reads d(G) = depth(top); the k-flexibility verdict reads
"every depth-k state has dist <= d-k"; canonical witnesses and
counterexamples are recovered afterwards by a lexicographic DFS over
element subsets that walks the same memoized tables, so reported tuples
are exactly the first ones in combination order.
"""

from __future__ import annotations

import threading

import numpy as np

from . import backends
from .core import FiniteGroup
from .errors import InternalInvariantViolation, OrderCapExceeded

DEFAULT_MAX_STATES = 300_000


class GenerationGraph:
    def __init__(self, group: FiniteGroup, max_states: int = DEFAULT_MAX_STATES):
        self.group = group
        self.n = group.order
        self.max_states = max_states
        self._table = group.table
        self._key_to_id: dict[bytes, int] = {}
        self._members: list[np.ndarray] = []
        self._masks: list[np.ndarray] = []
        self._ext: list[np.ndarray | None] = []
        self._depth: list[int] = []
        self._dist: list[int] | None = None
        self._top: int | None = None
        self._frontier: list[int] = []
        self._level = 0
        self._exhausted = False
        self._lock = threading.RLock()

        bottom_mask = np.zeros(self.n, dtype=np.bool_)
        bottom_mask[group.identity] = True
        self.bottom = self._intern(bottom_mask)
        self._depth[self.bottom] = 0
        self._frontier = [self.bottom]

    # -- state interning -------------------------------------------------

    def _intern(self, mask: np.ndarray) -> int:
        key = np.packbits(mask).tobytes()
        sid = self._key_to_id.get(key)
        if sid is not None:
            return sid
        sid = len(self._members)
        if sid >= self.max_states:
            raise OrderCapExceeded(
                f"subgroup state budget {self.max_states} exceeded for "
                f"group of order {self.n}"
            )
        self._key_to_id[key] = sid
        members = np.flatnonzero(mask).astype(np.int64)
        mask = mask.copy()
        mask.setflags(write=False)
        self._members.append(members)
        self._masks.append(mask)
        self._ext.append(None)
        self._depth.append(-1)
        if members.size == self.n:
            self._top = sid
        return sid

    def state_count(self) -> int:
        return len(self._members)

    def members(self, sid: int) -> np.ndarray:
        return self._members[sid]

    def mask(self, sid: int) -> np.ndarray:
        return self._masks[sid]

    def size(self, sid: int) -> int:
        return int(self._members[sid].size)

    def state_for_members(self, members) -> int:
        """Intern an already-closed member set."""
        mask = np.zeros(self.n, dtype=np.bool_)
        mask[np.asarray(list(members), dtype=np.int64)] = True
        with self._lock:
            return self._intern(mask)

    def closure_state(self, seeds) -> int:
        seeds = np.asarray(list(seeds), dtype=np.int64)
        mask = backends.closure_mask(self._table, seeds, self.group.identity)
        with self._lock:
            return self._intern(mask)

    # -- transitions -----------------------------------------------------

    def ext(self, sid: int, x: int) -> int:
        """State id of <H u {x}>."""
        with self._lock:
            row = self._ext[sid]
            if row is None:
                row = np.full(self.n, -1, dtype=np.int32)
                self._ext[sid] = row
            tid = int(row[x])
            if tid >= 0:
                return tid
            if self._masks[sid][x]:
                tid = sid
            else:
                mask = backends.closure_extend(self._table, self._members[sid], x)
                tid = self._intern(mask)
            row[x] = tid
            return tid

    def join(self, sid: int, other_members) -> int:
        """State id of <H u S> by chained single-element extensions."""
        cur = sid
        for x in other_members:
            cur = self.ext(cur, int(x))
        return cur

    # -- level BFS ---------------------------------------------------------

    def _expand_level(self) -> None:
        nxt: list[int] = []
        level = self._level + 1
        for sid in self._frontier:
            for x in range(self.n):
                tid = self.ext(sid, x)
                if self._depth[tid] < 0:
                    self._depth[tid] = level
                    nxt.append(tid)
        self._level = level
        self._frontier = nxt
        if not nxt:
            self._exhausted = True

    def top_depth(self) -> int:
        """d(G): the BFS level at which the full group first appears."""
        with self._lock:
            while self._top is None or self._depth[self._top] < 0:
                if self._exhausted:
                    raise InternalInvariantViolation(
                        "generation BFS exhausted without reaching the full group"
                    )
                self._expand_level()
            return self._depth[self._top]

    def top(self) -> int:
        self.top_depth()
        return self._top  # type: ignore[return-value]

    def ensure_full(self) -> None:
        """Expand until every subgroup is interned with depth and ext rows."""
        with self._lock:
            while not self._exhausted:
                self._expand_level()

    def depth(self, sid: int) -> int:
        d = self._depth[sid]
        if d < 0:
            self.ensure_full()
            d = self._depth[sid]
        return d

    def states_at_depth(self, k: int) -> list[int]:
        self.ensure_full()
        return [sid for sid in range(self.state_count()) if self._depth[sid] == k]

    def all_state_ids_sorted(self) -> list[int]:
        """All subgroups, ordered by (order, member list)."""
        self.ensure_full()
        ids = range(self.state_count())
        return sorted(ids, key=lambda s: (self.size(s), tuple(self._members[s])))

    # -- distance to the full group ---------------------------------------

    def dist_to_top(self) -> list[int]:
        with self._lock:
            if self._dist is not None:
                return self._dist
            self.ensure_full()
            top = self.top()
            order_desc = sorted(range(self.state_count()),
                                key=lambda s: -self.size(s))
            dist = [0] * self.state_count()
            for sid in order_desc:
                if sid == top:
                    dist[sid] = 0
                    continue
                row = self._ext[sid]
                mask = self._masks[sid]
                best = self.n + 1
                for x in range(self.n):
                    if mask[x]:
                        continue
                    dx = dist[int(row[x])]
                    if dx < best:
                        best = dx
                dist[sid] = 1 + best
            self._dist = dist
            return dist


def get_graph(group: FiniteGroup) -> GenerationGraph:
    return group._cached("gengraph", lambda: GenerationGraph(group))


# ---------------------------------------------------------------------------
# lexicographic subset hunts over the memoized graph


def lex_min_generating_subset(graph: GenerationGraph, k: int) -> tuple[int, ...] | None:
    """First k-subset in combination order whose closure is the whole group."""
    graph.ensure_full()
    dist = graph.dist_to_top()
    top = graph.top()
    n = graph.n

    def rec(state: int, start: int, slots: int, prefix: list[int]):
        if slots == 0:
            return tuple(prefix) if state == top else None
        for x in range(start, n):
            t = graph.ext(state, x)
            if dist[t] > slots - 1:
                continue
            prefix.append(x)
            out = rec(t, x + 1, slots - 1, prefix)
            if out is not None:
                return out
            prefix.pop()
        return None

    return rec(graph.bottom, 0, k, [])


def iter_rank_k_subsets(graph: GenerationGraph, k: int):
    """Yield (subset, state) for k-subsets with d(<subset>) = k, in lex order.

    Prefix pruning: a prefix of size j can only lead to rank-k leaves if its
    own closure already has rank exactly j.
    """
    graph.ensure_full()
    n = graph.n

    def rec(state: int, start: int, prefix: list[int]):
        if len(prefix) == k:
            yield tuple(prefix), state
            return
        j = len(prefix)
        for x in range(start, n):
            if graph.mask(state)[x]:
                continue
            t = graph.ext(state, x)
            if graph.depth(t) != j + 1:
                continue
            prefix.append(x)
            yield from rec(t, x + 1, prefix)
            prefix.pop()

    yield from rec(graph.bottom, 0, [])


def lex_min_failing_subset(graph: GenerationGraph, k: int,
                           failing: set[int]) -> tuple[int, ...] | None:
    """First k-subset (lex) with rank k whose closure lies in ``failing``.

    Subtrees whose prefix closure is not contained in any failing subgroup
    cannot reach a failing leaf and are skipped.
    """
    graph.ensure_full()
    n = graph.n
    failing_masks = [graph.mask(s) for s in failing]

    def contained_in_failing(sid: int) -> bool:
        m = graph.mask(sid)
        for fm in failing_masks:
            if not (m & ~fm).any():
                return True
        return False

    def rec(state: int, start: int, prefix: list[int]):
        if len(prefix) == k:
            return tuple(prefix) if state in failing else None
        j = len(prefix)
        for x in range(start, n):
            if graph.mask(state)[x]:
                continue
            t = graph.ext(state, x)
            if graph.depth(t) != j + 1 or not contained_in_failing(t):
                continue
            prefix.append(x)
            out = rec(t, x + 1, prefix)
            if out is not None:
                return out
            prefix.pop()
        return None

    return rec(graph.bottom, 0, [])


def extension_path(graph: GenerationGraph, sid: int) -> list[int]:
    """Greedy lexicographic shortest generator chain from state to the top."""
    graph.ensure_full()
    dist = graph.dist_to_top()
    top = graph.top()
    out: list[int] = []
    cur = sid
    while cur != top:
        want = dist[cur] - 1
        step = None
        for x in range(graph.n):
            if graph.mask(cur)[x]:
                continue
            t = graph.ext(cur, x)
            if dist[t] == want:
                step = x
                cur = t
                break
        if step is None:
            raise InternalInvariantViolation("no distance-decreasing extension")
        out.append(step)
    return out


def conjugacy_state_reps(graph: GenerationGraph, sids) -> list[int]:
    """One state per conjugacy orbit of subgroups (orbit-minimal mask key)."""
    group = graph.group
    table, inv = group.table, group.inverses
    chosen: dict[bytes, int] = {}
    for sid in sids:
        mem = graph.members(sid)
        best: bytes | None = None
        for g in range(group.order):
            conj = table[table[g, mem], inv[g]]
            mask = np.zeros(graph.n, dtype=np.bool_)
            mask[conj] = True
            key = np.packbits(mask).tobytes()
            if best is None or key < best:
                best = key
        assert best is not None
        chosen.setdefault(best, sid)
    return sorted(chosen.values())
