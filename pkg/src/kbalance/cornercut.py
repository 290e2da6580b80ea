"""Exhaustive edge-removal oracle: how many vertices can B edges split off?

For a graph G and budget B the oracle returns

    max over edge sets F with |F| <= B of  n - (largest component of G - F).

Removing more edges never merges components, so the maximum is reached by a
set of exactly min(B, |E|) edges. Every such set is scored: the search walks
all (B-1)-subsets, computes the components and bridges of G minus that
prefix, and then scores each extension by one later edge in O(1) (only a
bridge changes the components, splitting one of them in two).
"""

from __future__ import annotations

from math import comb

import numpy as np
from numba import njit

from .core import GridGraph, InputError, TooLargeError, connected_components

ENUMERATION_BUDGET = 10**8


@njit(cache=True)
def _scan(n, eu, ev, budget):
    m = eu.shape[0]
    deg = np.zeros(n + 1, np.int64)
    for e in range(m):
        deg[eu[e] + 1] += 1
        deg[ev[e] + 1] += 1
    start = np.cumsum(deg)
    fill = start[:n].copy()
    nbr = np.empty(2 * m, np.int64)
    eid = np.empty(2 * m, np.int64)
    for e in range(m):
        a, b = eu[e], ev[e]
        nbr[fill[a]] = b
        eid[fill[a]] = e
        fill[a] += 1
        nbr[fill[b]] = a
        eid[fill[b]] = e
        fill[b] += 1

    removed = np.zeros(m, np.bool_)
    disc = np.empty(n, np.int64)
    low = np.empty(n, np.int64)
    sub = np.empty(n, np.int64)
    comp = np.empty(n, np.int64)
    comp_size = np.empty(n, np.int64)
    via = np.empty(n, np.int64)       # edge used to reach a vertex in the DFS tree
    ptr = np.empty(n, np.int64)
    stack = np.empty(n, np.int64)
    split = np.empty(m, np.int64)     # size of the side cut off by a bridge, or -1

    r = budget - 1
    idx = np.arange(max(r, 0))
    best = 0
    while True:
        for t in range(r):
            removed[idx[t]] = True

        # components and bridges of G minus the prefix (iterative Tarjan)
        for v in range(n):
            disc[v] = -1
        for e in range(m):
            split[e] = -1
        clock = 0
        ncomp = 0
        for root in range(n):
            if disc[root] != -1:
                continue
            top = 0
            stack[0] = root
            disc[root] = clock
            low[root] = clock
            clock += 1
            sub[root] = 1
            via[root] = -1
            ptr[root] = start[root]
            comp[root] = ncomp
            csize = 1
            while top >= 0:
                v = stack[top]
                if ptr[v] < start[v + 1]:
                    k = ptr[v]
                    ptr[v] += 1
                    e = eid[k]
                    if removed[e] or e == via[v]:
                        continue
                    w = nbr[k]
                    if disc[w] == -1:
                        disc[w] = clock
                        low[w] = clock
                        clock += 1
                        sub[w] = 1
                        via[w] = e
                        ptr[w] = start[w]
                        comp[w] = ncomp
                        csize += 1
                        top += 1
                        stack[top] = w
                    elif disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    top -= 1
                    if top >= 0:
                        p = stack[top]
                        sub[p] += sub[v]
                        if low[v] < low[p]:
                            low[p] = low[v]
                        if low[v] > disc[p]:
                            split[via[v]] = sub[v]
            comp_size[ncomp] = csize
            ncomp += 1

        largest = 0
        for c in range(1, ncomp):
            if comp_size[c] > comp_size[largest]:
                largest = c
        second = 0
        for c in range(ncomp):
            if c != largest and comp_size[c] > second:
                second = comp_size[c]
        base = n - comp_size[largest]

        first = idx[r - 1] + 1 if r > 0 else 0
        for e in range(first, m):
            if split[e] < 0:
                val = base
            else:
                c = comp[eu[e]]
                a = split[e]
                b = comp_size[c] - a
                other = second if c == largest else comp_size[largest]
                biggest = max(a, max(b, other))
                val = n - biggest
            if val > best:
                best = val

        for t in range(r):
            removed[idx[t]] = False
        # next (r)-combination of range(m - 1); the last edge is added above
        t = r - 1
        while t >= 0 and idx[t] == m - 1 - r + t:
            t -= 1
        if t < 0:
            break
        idx[t] += 1
        for j in range(t + 1, r):
            idx[j] = idx[j - 1] + 1
    return best


def subset_count(num_edges: int, budget: int) -> int:
    return sum(comb(num_edges, j) for j in range(min(budget, num_edges) + 1))


def max_separable(n: int, edges, budget: int) -> int:
    """Most vertices outside the largest component after removing <= budget edges."""
    if budget < 0:
        raise InputError("edge budget must be nonnegative")
    edges = list(edges)
    if subset_count(len(edges), budget) > ENUMERATION_BUDGET:
        raise TooLargeError(
            f"{subset_count(len(edges), budget)} edge subsets exceed the enumeration budget {ENUMERATION_BUDGET}")
    if n == 0:
        return 0
    b = min(budget, len(edges))
    arr = np.array(edges, dtype=np.int64).reshape(-1, 2)
    eu = np.ascontiguousarray(arr[:, 0])
    ev = np.ascontiguousarray(arr[:, 1])
    if b == 0:
        return n - max(len(c) for c in connected_components(n, edges))
    return int(_scan(n, eu, ev, b))


def corner_cut_oracle(width: int, height: int, budget: int) -> int:
    """Exhaustive maximum of separable vertices in a full width x height rectangle.

    Only the regime where ``budget`` edges cannot cut across the rectangle is
    accepted (``budget < min(width, height)``).
    """
    if budget >= min(width, height):
        raise InputError(f"budget {budget} must be below min(W, H) = {min(width, height)}")
    grid = GridGraph.rectangle(width, height)
    return max_separable(grid.n, grid.edges, budget)
