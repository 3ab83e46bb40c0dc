"""Finite groups as validated Cayley tables over element indices 0..n-1.

Every constructor fixes a canonical element ordering (documented per
constructor) so that downstream searches, witnesses and reports are
byte-reproducible.  Groups are immutable after construction and safe to
share across threads.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from . import backends
from .errors import (
    EqualPrimes,
    InternalInvariantViolation,
    InvalidAction,
    MissingInverse,
    NoIdentity,
    NotAssociative,
    NotBijection,
    NotNormal,
    NotASubgroup,
    NotPrime,
    OrderCapExceeded,
    SingularMatrix,
)

if TYPE_CHECKING:  # pragma: no cover
    from .subgroups import SubgroupSet

DEFAULT_ORDER_CAP = 4096
ISO_SEARCH_CAP = 24


def resolve_order_cap(cap: int | None = None) -> int:
    """Effective order cap: explicit argument, else FLEXGROUP_ORDER_CAP, else 4096."""
    if cap is not None:
        return int(cap)
    env = os.environ.get("FLEXGROUP_ORDER_CAP")
    if env:
        return int(env)
    return DEFAULT_ORDER_CAP


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _require_prime(p: int, what: str) -> None:
    if not is_prime(p):
        raise NotPrime(f"{what} must be prime, got {p}")


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``table[x, y]`` holds the index of ``x * y``.  The table is validated at
    construction: two-sided identity, two-sided inverses, and associativity
    via Light's test on a greedily chosen generating set.
    """

    __slots__ = ("order", "table", "identity", "inverses", "labels", "origin",
                 "_meta", "_cache", "_lock")

    def __init__(self, table, labels: Sequence[str] | None = None,
                 origin: str = "", meta: dict | None = None):
        arr = np.ascontiguousarray(np.asarray(table, dtype=np.int64))
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise NoIdentity(f"table must be square and nonempty, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            bad = int(np.argmax((arr < 0) | (arr >= n)))
            raise NoIdentity(
                f"table entries must lie in [0, {n}); row {bad // n} col {bad % n} "
                f"holds {int(arr.flat[bad])}"
            )
        arr = arr.astype(np.int32)
        arr.setflags(write=False)

        self.order = n
        self.table = arr
        self.identity = _find_identity(arr)
        self.inverses = _find_inverses(arr, self.identity)
        _check_associativity(arr, self.identity)

        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        self.labels = tuple(str(s) for s in labels)
        self.origin = origin or f"from_cayley_table(order={n})"
        self._meta = dict(meta) if meta else {}
        self._cache = {}
        self._lock = threading.RLock()

    # -- basic queries -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return int(self.table[self.table[g, x], self.inverses[g]])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(x), -k)
        acc = self.identity
        cur = x
        while k:
            if k & 1:
                acc = self.mul(acc, cur)
            cur = self.mul(cur, cur)
            k >>= 1
        return acc

    def _cached(self, key, fn):
        cache = self._cache
        if key in cache:
            return cache[key]
        with self._lock:
            if key not in cache:
                cache[key] = fn()
            return cache[key]

    def element_orders(self) -> np.ndarray:
        return self._cached("orders", lambda: backends.element_orders(self.table, self.identity))

    def cyclic_membership(self) -> np.ndarray:
        """M[z, x] = (x lies in <z>); cached, read-only."""
        def build():
            m = backends.cyclic_membership(self.table, self.identity)
            m.setflags(write=False)
            return m
        return self._cached("cyclic_membership", build)

    def is_abelian(self) -> bool:
        return self._cached("abelian", lambda: bool((self.table == self.table.T).all()))

    def exponent(self) -> int:
        return self._cached("exponent", lambda: int(np.lcm.reduce(self.element_orders())))

    def element_order(self, x: int) -> int:
        return int(self.element_orders()[x])

    def __repr__(self):
        return f"<FiniteGroup order={self.order} origin={self.origin!r}>"

    # -- serialization -------------------------------------------------

    def to_json_doc(self) -> dict:
        return {
            "order": self.order,
            "labels": list(self.labels),
            "table": self.table.tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_doc(), sort_keys=True)


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    idx = np.arange(n, dtype=table.dtype)
    row_ok = (table == idx[None, :]).all(axis=1)
    col_ok = (table.T == idx[None, :]).all(axis=1)
    both = np.flatnonzero(row_ok & col_ok)
    if both.size == 0:
        raise NoIdentity("no two-sided identity element")
    return int(both[0])


def _find_inverses(table: np.ndarray, identity: int) -> np.ndarray:
    right = table == identity           # right[x, y] = (x*y == e)
    two_sided = right & right.T
    has = two_sided.any(axis=1)
    if not has.all():
        missing = np.flatnonzero(~has)
        raise MissingInverse(
            f"elements {missing.tolist()} have no two-sided inverse"
        )
    inv = two_sided.argmax(axis=1).astype(np.int32)
    inv.setflags(write=False)
    return inv


def _check_associativity(table: np.ndarray, identity: int) -> None:
    # Light's test: pick a greedy generating set S (closure under the raw
    # binary operation, no associativity assumed), then associativity of the
    # whole table is equivalent to (a*g)*c == a*(g*c) for g in S only.
    n = table.shape[0]
    known = backends.closure_mask(table, np.empty(0, dtype=np.int64), identity)
    gens: list[int] = []
    while not known.all():
        x = int(np.argmin(known))       # smallest element not yet generated
        gens.append(x)
        known = backends.closure_extend(table, np.flatnonzero(known).astype(np.int64), x)
    hit = backends.light_violation(table, np.asarray(gens, dtype=np.int64))
    if hit is not None:
        a, g, c = hit
        raise NotAssociative(
            f"({a}*{g})*{c} = {int(table[table[a, g], c])} but "
            f"{a}*({g}*{c}) = {int(table[a, table[g, c]])}"
        )


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism given by its value table on source indices."""

    source: FiniteGroup
    target: FiniteGroup
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def validate(self) -> None:
        src, tgt = self.source, self.target
        m = np.asarray(self.map, dtype=np.int64)
        if m.shape != (src.order,) or m.min() < 0 or m.max() >= tgt.order:
            raise InternalInvariantViolation("hom map has wrong shape or range")
        if m[src.identity] != tgt.identity:
            raise InternalInvariantViolation("hom does not fix the identity")
        lhs = m[src.table]                       # map(x*y)
        rhs = tgt.table[np.ix_(m, m)]            # map(x)*map(y)
        if not (lhs == rhs).all():
            bad = np.argwhere(lhs != rhs)[0]
            raise InternalInvariantViolation(
                f"map({bad[0]}*{bad[1]}) != map({bad[0]})*map({bad[1]})"
            )

    def is_bijective(self) -> bool:
        return len(set(self.map)) == self.source.order == self.target.order


# ---------------------------------------------------------------------------
# constructors


def from_cayley_table(table, labels: Sequence[str] | None = None) -> FiniteGroup:
    """Validate a raw Cayley table and wrap it as a group."""
    arr = np.asarray(table)
    return FiniteGroup(arr, labels=labels,
                       origin=f"from_cayley_table(order={arr.shape[0] if arr.ndim else 0})",
                       meta={"constructor": "from_cayley_table"})


def from_json_doc(doc: dict) -> FiniteGroup:
    """Inverse of :meth:`FiniteGroup.to_json_doc` ({order, labels, table})."""
    table = doc["table"]
    labels = doc.get("labels")
    g = from_cayley_table(table, labels=labels)
    if doc.get("order") not in (None, g.order):
        raise ValueError(f"declared order {doc['order']} != table size {g.order}")
    return g


def cyclic(n: int) -> FiniteGroup:
    """Z/n with elements 0..n-1 in additive notation; element i is labeled 'i'."""
    if n < 1:
        raise ValueError(f"cyclic order must be >= 1, got {n}")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, labels=[str(i) for i in range(n)],
                       origin=f"cyclic({n})",
                       meta={"constructor": "cyclic", "n": n})


def _vector_powers(p: int, r: int) -> np.ndarray:
    return p ** np.arange(r - 1, -1, -1, dtype=np.int64)


def _vector_labels(p: int, r: int) -> list[str]:
    pw = _vector_powers(p, r)
    out = []
    for w in range(p**r):
        digits = (w // pw) % p
        out.append("(" + ",".join(str(int(d)) for d in digits) + ")")
    return out


def _vector_add_table(p: int, r: int) -> np.ndarray:
    """S[u, w] = index of the digitwise sum mod p; index is base-p, msd first."""
    n = p**r
    pw = _vector_powers(p, r)
    out = np.zeros((n, n), dtype=np.int64)
    idx = np.arange(n, dtype=np.int64)
    for i in range(r):
        di = (idx // pw[i]) % p
        out += ((di[:, None] + di[None, :]) % p) * pw[i]
    return out


def elementary_abelian(p: int, r: int, order_cap: int | None = None) -> FiniteGroup:
    """(Z/p)^r; element w encodes the vector of base-p digits of w, msd first."""
    _require_prime(p, "p")
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    cap = resolve_order_cap(order_cap)
    n = p**r
    if n > cap:
        raise OrderCapExceeded(f"order {n} exceeds cap {cap}")
    table = _vector_add_table(p, r)
    return FiniteGroup(table, labels=_vector_labels(p, r),
                       origin=f"elementary_abelian({p},{r})",
                       meta={"constructor": "elementary_abelian", "p": p, "r": r})


def _matrix_order_mod_p(mat: np.ndarray, p: int, limit: int) -> int:
    ident = np.eye(mat.shape[0], dtype=np.int64)
    cur = mat.copy()
    t = 1
    while not (cur == ident).all():
        cur = (cur @ mat) % p
        t += 1
        if t > limit:
            raise OrderCapExceeded(f"matrix order exceeds {limit}")
    return t


def _is_invertible_mod_p(mat: np.ndarray, p: int) -> bool:
    m = mat.copy() % p
    r = m.shape[0]
    row = 0
    for col in range(r):
        piv = None
        for i in range(row, r):
            if m[i, col] % p:
                piv = i
                break
        if piv is None:
            return False
        m[[row, piv]] = m[[piv, row]]
        inv = pow(int(m[row, col]), -1, p)
        m[row] = (m[row] * inv) % p
        for i in range(r):
            if i != row and m[i, col]:
                m[i] = (m[i] - m[i, col] * m[row]) % p
        row += 1
    return True


def matrix_affine(p: int, r: int, mat, order_cap: int | None = None) -> FiniteGroup:
    """The semidirect product p^r : <M> for an invertible r x r matrix M mod p.

    Elements are pairs (vector v, power a of M) with index a*p^r + v, so the
    translation subgroup occupies indices 0..p^r-1.  Multiplication is
    (u, M^a)(v, M^b) = (u + M^a v, M^(a+b)).
    """
    _require_prime(p, "p")
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    m = np.asarray(mat, dtype=np.int64) % p
    if m.shape != (r, r):
        raise SingularMatrix(f"matrix must be {r}x{r}, got shape {m.shape}")
    if not _is_invertible_mod_p(m, p):
        raise SingularMatrix(f"matrix {m.tolist()} is singular mod {p}")
    cap = resolve_order_cap(order_cap)
    nv = p**r
    t = _matrix_order_mod_p(m, p, limit=max(cap, 1))
    n = nv * t
    if n > cap:
        raise OrderCapExceeded(f"order {nv}*{t} = {n} exceeds cap {cap}")

    pw = _vector_powers(p, r)
    idx = np.arange(nv, dtype=np.int64)
    digits = np.stack([(idx // pw[i]) % p for i in range(r)], axis=1)  # (nv, r)
    add = _vector_add_table(p, r)

    # action[a][w] = index of M^a applied to vector w
    action = np.empty((t, nv), dtype=np.int64)
    cur = np.eye(r, dtype=np.int64)
    for a in range(t):
        action[a] = ((digits @ cur.T) % p) @ pw
        cur = (cur @ m) % p

    table = np.empty((n, n), dtype=np.int64)
    for a in range(t):
        rows = slice(a * nv, (a + 1) * nv)
        moved = action[a]                       # M^a v for every v
        for b in range(t):
            cols = slice(b * nv, (b + 1) * nv)
            table[rows, cols] = ((a + b) % t) * nv + add[:, moved]

    vec_labels = _vector_labels(p, r)
    labels = []
    for a in range(t):
        for w in range(nv):
            if a == 0:
                labels.append(vec_labels[w])
            elif w == 0:
                labels.append(f"g^{a}")
            else:
                labels.append(f"{vec_labels[w]}g^{a}")
    return FiniteGroup(
        table, labels=labels,
        origin=f"matrix_affine({p},{r},{m.tolist()})",
        meta={"constructor": "matrix_affine", "p": p, "r": r,
              "matrix": tuple(map(tuple, m.tolist())), "matrix_order": t},
    )


def scalar_affine(p: int, r: int, s: int, order_cap: int | None = None) -> FiniteGroup:
    """p^r : <g> with g the scalar matrix s*I; delegates to matrix_affine."""
    _require_prime(p, "p")
    if not 1 <= s < p:
        raise ValueError(f"scalar must lie in [1, {p}), got {s}")
    g = matrix_affine(p, r, s * np.eye(r, dtype=np.int64), order_cap=order_cap)
    meta = dict(g._meta)
    meta.update({"constructor": "scalar_affine", "p": p, "r": r, "s": s,
                 "scalar_order": meta.pop("matrix_order")})
    out = FiniteGroup(g.table, labels=g.labels,
                      origin=f"scalar_affine({p},{r},{s})", meta=meta)
    return out


_Q8_AXIS_PROD = (
    ((0, 0), (1, 0), (2, 0), (3, 0)),   # 1 * x
    ((1, 0), (0, 1), (3, 0), (2, 1)),   # i * {1,i,j,k} = i, -1, k, -j
    ((2, 0), (3, 1), (0, 1), (1, 0)),   # j * {1,i,j,k} = j, -k, -1, i
    ((3, 0), (2, 0), (1, 1), (0, 1)),   # k * {1,i,j,k} = k, j, -i, -1
)


def quaternion8() -> FiniteGroup:
    """Q8 with elements ordered 1, -1, i, -i, j, -j, k, -k."""
    table = np.zeros((8, 8), dtype=np.int64)
    for a in range(8):
        ax_a, sg_a = divmod(a, 2)
        for b in range(8):
            ax_b, sg_b = divmod(b, 2)
            ax, flip = _Q8_AXIS_PROD[ax_a][ax_b]
            table[a, b] = ax * 2 + (sg_a ^ sg_b ^ flip)
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return FiniteGroup(table, labels=labels, origin="quaternion8()",
                       meta={"constructor": "quaternion8"})


def _multiplicative_order(r: int, p: int) -> int | None:
    r %= p
    if r == 0:
        return None
    cur = r
    t = 1
    while cur != 1:
        cur = (cur * r) % p
        t += 1
        if t > p:
            return None
    return t


def miller_moreno(p: int, q: int, m: int, r: int,
                  order_cap: int | None = None) -> FiniteGroup:
    """The group <a, b | a^p = b^(q^m) = 1, b^-1 a b = a^r> of order p*q^m.

    Requires ord(r mod p) = q, so b acts on <a> with order exactly q and
    b^q is central.  Elements (a^i, b^j) are indexed j*p + i, putting <a>
    at indices 0..p-1 and b at index p.
    """
    _require_prime(p, "p")
    _require_prime(q, "q")
    if p == q:
        raise EqualPrimes(f"p and q must be distinct primes, both are {p}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if r <= 1:
        raise InvalidAction(f"action parameter must exceed 1, got {r}")
    t = _multiplicative_order(r, p)
    if t != q:
        raise InvalidAction(
            f"ord({r} mod {p}) = {t}, need exactly {q} for b to act with order q"
        )
    cap = resolve_order_cap(order_cap)
    qm = q**m
    n = p * qm
    if n > cap:
        raise OrderCapExceeded(f"order {p}*{q}^{m} = {n} exceeds cap {cap}")

    rpow = np.empty(qm, dtype=np.int64)
    rpow[0] = 1
    for j in range(1, qm):
        rpow[j] = (rpow[j - 1] * r) % p

    i_idx = np.arange(p, dtype=np.int64)
    table = np.empty((n, n), dtype=np.int64)
    for j in range(qm):
        rows = slice(j * p, (j + 1) * p)
        for j2 in range(qm):
            cols = slice(j2 * p, (j2 + 1) * p)
            prod_i = (i_idx[:, None] + rpow[j] * i_idx[None, :]) % p
            table[rows, cols] = ((j + j2) % qm) * p + prod_i

    labels = []
    for j in range(qm):
        for i in range(p):
            parts = []
            if i:
                parts.append("a" if i == 1 else f"a^{i}")
            if j:
                parts.append("b" if j == 1 else f"b^{j}")
            labels.append("*".join(parts) if parts else "e")
    return FiniteGroup(table, labels=labels,
                       origin=f"miller_moreno({p},{q},{m},{r})",
                       meta={"constructor": "miller_moreno",
                             "p": p, "q": q, "m": m, "r": r})


def _cycles_of_perm(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "e"


def perm_group(degree: int, generators: Iterable[Sequence[int]],
               order_cap: int | None = None) -> FiniteGroup:
    """Closure of the given permutations of {0..degree-1} under composition.

    Permutations are image tuples; (p*q)[i] = p[q[i]].  Elements are sorted
    lexicographically, which puts the identity first.
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    cap = resolve_order_cap(order_cap)
    gens = []
    for g in generators:
        tg = tuple(int(v) for v in g)
        if sorted(tg) != list(range(degree)):
            raise NotBijection(f"{tg} is not a permutation of 0..{degree - 1}")
        gens.append(tg)

    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    for g in gens:
        if g not in elems:
            elems.add(g)
            frontier.append(g)
    while frontier:
        nxt = []
        for a in gens:
            for b in frontier:
                c = tuple(a[b[i]] for i in range(degree))
                if c not in elems:
                    elems.add(c)
                    nxt.append(c)
                    if len(elems) > cap:
                        raise OrderCapExceeded(
                            f"generated order exceeds cap {cap}"
                        )
        frontier = nxt

    ordered = sorted(elems)
    index = {g: i for i, g in enumerate(ordered)}
    n = len(ordered)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            table[i, j] = index[tuple(a[b[k]] for k in range(degree))]
    gen_text = ", ".join(_cycles_of_perm(g) for g in gens)
    return FiniteGroup(table, labels=[_cycles_of_perm(g) for g in ordered],
                       origin=f"perm_group({degree}; {gen_text})",
                       meta={"constructor": "perm_group", "degree": degree})


def direct_product(g: FiniteGroup, h: FiniteGroup,
                   order_cap: int | None = None) -> FiniteGroup:
    """Componentwise product on pairs; (a, b) is indexed a*|H| + b."""
    cap = resolve_order_cap(order_cap)
    n = g.order * h.order
    if n > cap:
        raise OrderCapExceeded(f"order {g.order}*{h.order} = {n} exceeds cap {cap}")
    tg = g.table.astype(np.int64)
    th = h.table.astype(np.int64)
    table = (tg[:, None, :, None] * h.order + th[None, :, None, :]).reshape(n, n)
    labels = [f"({la},{lb})" for la in g.labels for lb in h.labels]
    return FiniteGroup(table, labels=labels,
                       origin=f"direct_product({g.origin}, {h.origin})",
                       meta={"constructor": "direct_product"})


def members_mask(group: FiniteGroup, members: Iterable[int]) -> np.ndarray:
    mask = np.zeros(group.order, dtype=np.bool_)
    mask[np.asarray(list(members), dtype=np.int64)] = True
    return mask


def is_normal_members(group: FiniteGroup, members: Sequence[int]) -> bool:
    mem = np.asarray(members, dtype=np.int64)
    mask = members_mask(group, mem)
    table, inv = group.table, group.inverses
    for gidx in range(group.order):
        conj = table[table[gidx, mem], inv[gidx]]
        if not mask[conj].all():
            return False
    return True


def quotient(group: FiniteGroup, normal: "SubgroupSet") -> tuple[FiniteGroup, GroupHom]:
    """The quotient by a normal subgroup, plus the canonical projection.

    Cosets are ordered by their least member; each coset is labeled by the
    bracketed label of that representative.
    """
    if normal.parent is not group:
        raise NotASubgroup("subgroup belongs to a different parent group")
    mem = np.asarray(normal.members, dtype=np.int64)
    mask = members_mask(group, mem)
    closed = backends.closure_mask(group.table, mem, group.identity)
    if not (closed == mask).all():
        raise NotASubgroup(f"member set of size {mem.size} is not closed")
    if not is_normal_members(group, normal.members):
        raise NotNormal(f"subgroup of order {mem.size} is not normal")

    reps = group.table[:, mem].min(axis=1)          # least member of each coset
    coset_reps = np.unique(reps)
    cidx = {int(rep): i for i, rep in enumerate(coset_reps)}
    qmap = np.array([cidx[int(r)] for r in reps], dtype=np.int64)
    qn = coset_reps.size
    qtable = qmap[group.table[np.ix_(coset_reps, coset_reps)]]
    labels = [f"[{group.labels[int(r)]}]" for r in coset_reps]
    q = FiniteGroup(qtable, labels=labels,
                    origin=f"quotient({group.origin}, N=order {mem.size})",
                    meta={"constructor": "quotient", "normal_order": int(mem.size)})
    hom = GroupHom(source=group, target=q, map=tuple(int(v) for v in qmap))
    hom.validate()
    return q, hom


# ---------------------------------------------------------------------------
# brute-force isomorphism search (small orders only)


def _greedy_generators(group: FiniteGroup) -> list[int]:
    known = backends.closure_mask(group.table, np.empty(0, dtype=np.int64),
                                  group.identity)
    gens = []
    while not known.all():
        x = int(np.argmin(known))
        gens.append(x)
        known = backends.closure_extend(group.table,
                                        np.flatnonzero(known).astype(np.int64), x)
    return gens


def find_isomorphism(g: FiniteGroup, h: FiniteGroup) -> list[int] | None:
    """Generator-image search; permitted only for order <= 24."""
    if g.order != h.order:
        return None
    if g.order > ISO_SEARCH_CAP:
        raise OrderCapExceeded(
            f"isomorphism search is limited to order <= {ISO_SEARCH_CAP}"
        )
    go, ho = g.element_orders(), h.element_orders()
    if sorted(go.tolist()) != sorted(ho.tolist()):
        return None
    gens = _greedy_generators(g)
    if not gens:  # trivial group
        return [h.identity]
    candidates = [np.flatnonzero(ho == go[x]).tolist() for x in gens]

    def attempt(images: list[int]) -> list[int] | None:
        mapping = np.full(g.order, -1, dtype=np.int64)
        mapping[g.identity] = h.identity
        work = [g.identity]
        while work:
            x = work.pop()
            for gen, img in zip(gens, images):
                y = g.mul(x, gen)
                fy = h.mul(int(mapping[x]), img)
                if mapping[y] < 0:
                    mapping[y] = fy
                    work.append(y)
                elif mapping[y] != fy:
                    return None
        if len(set(mapping.tolist())) != g.order:
            return None
        if not (mapping[g.table] == h.table[np.ix_(mapping, mapping)]).all():
            return None
        return [int(v) for v in mapping]

    def rec(i: int, chosen: list[int]):
        if i == len(gens):
            return attempt(chosen)
        for cand in candidates[i]:
            out = rec(i + 1, chosen + [cand])
            if out is not None:
                return out
        return None

    return rec(0, [])


def are_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    return find_isomorphism(g, h) is not None
