"""Numba @njit implementations of the hot kernels.

Twin of :mod:`flexgroup.kernels_numpy`; same signatures, same results.
These are tight scalar loops over the Cayley table, which is exactly the
access pattern the closure and cycliciser searches spend their time in.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _closure_from(table, mask, buf, cnt, start):
    # Worklist closure: every element popped multiplies, in both orders,
    # against all members present at pop time; later members pick up the
    # remaining pairs when they pop.  `start` skips pairs inside an
    # already-closed base.
    n = table.shape[0]
    head = start
    while head < cnt:
        x = buf[head]
        head += 1
        m = cnt
        for j in range(m):
            y = buf[j]
            z = table[x, y]
            if not mask[z]:
                mask[z] = True
                buf[cnt] = z
                cnt += 1
            z = table[y, x]
            if not mask[z]:
                mask[z] = True
                buf[cnt] = z
                cnt += 1
        if cnt == n:
            break
    return cnt


@njit(cache=True, nogil=True)
def closure_mask(table, seeds, identity):
    n = table.shape[0]
    mask = np.zeros(n, dtype=np.bool_)
    buf = np.empty(n, dtype=np.int64)
    cnt = 0
    mask[identity] = True
    buf[cnt] = identity
    cnt += 1
    for i in range(seeds.shape[0]):
        s = seeds[i]
        if not mask[s]:
            mask[s] = True
            buf[cnt] = s
            cnt += 1
    _closure_from(table, mask, buf, cnt, 0)
    return mask


@njit(cache=True, nogil=True)
def closure_extend(table, members, new_elt):
    n = table.shape[0]
    mask = np.zeros(n, dtype=np.bool_)
    buf = np.empty(n, dtype=np.int64)
    cnt = 0
    for i in range(members.shape[0]):
        m = members[i]
        mask[m] = True
        buf[cnt] = m
        cnt += 1
    if mask[new_elt]:
        return mask
    base = cnt
    mask[new_elt] = True
    buf[cnt] = new_elt
    cnt += 1
    _closure_from(table, mask, buf, cnt, base)
    return mask


@njit(cache=True, nogil=True)
def _light_violation_impl(table, gens):
    n = table.shape[0]
    for i in range(gens.shape[0]):
        g = gens[i]
        for a in range(n):
            ag = table[a, g]
            for c in range(n):
                if table[ag, c] != table[a, table[g, c]]:
                    return a, g, c
    return -1, -1, -1


def light_violation(table, gens):
    a, g, c = _light_violation_impl(table, np.asarray(gens, dtype=np.int64))
    if a < 0:
        return None
    return int(a), int(g), int(c)


@njit(cache=True, nogil=True)
def cyclic_membership(table, identity):
    n = table.shape[0]
    mem = np.zeros((n, n), dtype=np.bool_)
    for z in range(n):
        mem[z, identity] = True
        cur = z
        while cur != identity:
            mem[z, cur] = True
            cur = table[cur, z]
    return mem


@njit(cache=True, nogil=True)
def element_orders(table, identity):
    n = table.shape[0]
    out = np.empty(n, dtype=np.int64)
    for z in range(n):
        cur = z
        k = 1
        while cur != identity:
            cur = table[cur, z]
            k += 1
        out[z] = k
    return out


@njit(cache=True, nogil=True)
def pair_cyclic_matrix(mem):
    n = mem.shape[0]
    out = np.zeros((n, n), dtype=np.bool_)
    for x in range(n):
        out[x, x] = True
        for y in range(x + 1, n):
            for z in range(n):
                if mem[z, x] and mem[z, y]:
                    out[x, y] = True
                    out[y, x] = True
                    break
    return out


@njit(cache=True, nogil=True)
def cycliciser_mask(mem):
    n = mem.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for c in range(n):
        ok = True
        for g in range(n):
            found = False
            for z in range(n):
                if mem[z, c] and mem[z, g]:
                    found = True
                    break
            if not found:
                ok = False
                break
        out[c] = ok
    return out
