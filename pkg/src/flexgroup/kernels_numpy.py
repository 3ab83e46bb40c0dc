"""Pure-numpy implementations of the hot kernels.

Every function here has a numba twin in :mod:`flexgroup.kernels_numba` with
the same signature and bit-identical results; the active implementation is
chosen by :mod:`flexgroup.backends`.
"""

from __future__ import annotations

import numpy as np


def _saturate(table: np.ndarray, mask: np.ndarray, members: np.ndarray,
              frontier: np.ndarray) -> np.ndarray:
    # rounds of frontier*members and members*frontier products; members must
    # already include the frontier
    while frontier.size:
        before = mask.copy()
        mask[table[frontier[:, None], members[None, :]]] = True
        mask[table[members[:, None], frontier[None, :]]] = True
        new = np.flatnonzero(mask & ~before)
        if new.size == 0:
            break
        members = np.concatenate([members, new])
        frontier = new
    return mask


def closure_mask(table: np.ndarray, seeds: np.ndarray, identity: int) -> np.ndarray:
    """Membership mask of the subgroup generated by ``seeds``."""
    n = table.shape[0]
    mask = np.zeros(n, dtype=np.bool_)
    mask[identity] = True
    seeds = np.asarray(seeds, dtype=np.int64)
    if seeds.size:
        mask[seeds] = True
    members = np.flatnonzero(mask)
    return _saturate(table, mask, members, members)


def closure_extend(table: np.ndarray, members: np.ndarray, new_elt: int) -> np.ndarray:
    """Membership mask of <H u {x}> for H already closed (given by ``members``)."""
    n = table.shape[0]
    members = np.asarray(members, dtype=np.int64)
    mask = np.zeros(n, dtype=np.bool_)
    mask[members] = True
    if mask[new_elt]:
        return mask
    mask[new_elt] = True
    frontier = np.array([new_elt], dtype=np.int64)
    return _saturate(table, mask, np.concatenate([members, frontier]), frontier)


def light_violation(table: np.ndarray, gens: np.ndarray):
    """First associativity violation (a, g, c) with g from ``gens``, or None.

    Scans generators in the given order and (a, c) in row-major order, so the
    reported triple is deterministic and matches the numba twin.
    """
    n = table.shape[0]
    for g in np.asarray(gens, dtype=np.int64):
        lhs = table[table[:, g], :]          # (a, c) -> (a*g)*c
        rhs = table[:, table[g, :]]          # (a, c) -> a*(g*c)
        neq = lhs != rhs
        if neq.any():
            flat = int(np.argmax(neq))
            a, c = divmod(flat, n)
            return int(a), int(g), int(c)
    return None


def cyclic_membership(table: np.ndarray, identity: int) -> np.ndarray:
    """Boolean matrix M with M[z, x] = (x lies in the cyclic subgroup <z>)."""
    n = table.shape[0]
    mem = np.zeros((n, n), dtype=np.bool_)
    idx = np.arange(n)
    mem[idx, identity] = True
    cur = idx.copy()
    active = cur != identity
    while active.any():
        zs = idx[active]
        mem[zs, cur[active]] = True
        cur[active] = table[cur[active], zs]
        active = cur != identity
    return mem


def element_orders(table: np.ndarray, identity: int) -> np.ndarray:
    """Order of every element; |<z>| equals the order of z."""
    return cyclic_membership(table, identity).sum(axis=1).astype(np.int64)


def pair_cyclic_matrix(mem: np.ndarray) -> np.ndarray:
    """C[x, y] = (<x, y> is cyclic), i.e. some <z> contains both x and y."""
    f = mem.astype(np.float32)
    return (f.T @ f) > 0.5


def cycliciser_mask(mem: np.ndarray) -> np.ndarray:
    """Mask of elements c such that <c, g> is cyclic for every g."""
    return pair_cyclic_matrix(mem).all(axis=1)
