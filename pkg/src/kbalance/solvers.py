"""Exact oracles and simple partitioners for k-balanced partitioning."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (Graph, GridGraph, InputError, Partition, TooLargeError, TreeGraph,
                   block_partition, ceil_div, connected_components, cut_size, size_bound)

EXACT_LIMIT = 20
PACKING_LIMIT = 30


@dataclass(frozen=True)
class SolveResult:
    partition: Partition
    cut: int
    optimal: bool
    algorithm: str


def exact_balanced_mincut(graph: Graph, k: int, epsilon=0) -> SolveResult:
    """Minimum cut over all colourings with parts of size at most (1+eps) ceil(n/k).

    Branch and bound over vertices in index order. Colour c may only be used
    once colour c-1 has been, which removes relabelled duplicates. The
    witness is the lexicographically first optimal colour vector.
    """
    n = graph.n
    if n > EXACT_LIMIT:
        raise TooLargeError(f"exact solver limited to n <= {EXACT_LIMIT}, got {n}")
    if k < 1:
        raise InputError("k must be positive")
    cap = math.floor(size_bound(n, k, epsilon))
    if k * cap < n:
        raise InputError("balance constraint is infeasible")

    earlier = [[] for _ in range(n)]  # neighbours with smaller index
    later = [[] for _ in range(n)]
    for i, j in graph.edges:
        earlier[j].append(i)
        later[i].append(j)

    colour = [-1] * n
    sizes = [0] * k
    # seen[v][c]: assigned neighbours of v with colour c; seen_total[v]: all assigned neighbours
    seen = [[0] * k for _ in range(n)]
    seen_total = [0] * n
    best_cut = len(graph.edges) + 1
    best: list[int] | None = None

    def bound(v: int) -> int:
        return sum(seen_total[u] - max(seen[u]) for u in range(v, n))

    def search(v: int, used: int, cut: int):
        nonlocal best_cut, best
        if v == n:
            if cut < best_cut:
                best_cut, best = cut, colour.copy()
            return
        if cut + bound(v) >= best_cut:
            return
        for c in range(min(used + 1, k)):
            if sizes[c] >= cap:
                continue
            delta = seen_total[v] - seen[v][c]
            colour[v] = c
            sizes[c] += 1
            for u in later[v]:
                seen[u][c] += 1
                seen_total[u] += 1
            search(v + 1, max(used, c + 1), cut + delta)
            for u in later[v]:
                seen[u][c] -= 1
                seen_total[u] -= 1
            sizes[c] -= 1
            colour[v] = -1

    search(0, 0, 0)
    partition = Partition(k, tuple(best if best is not None else ()))
    return SolveResult(partition, best_cut, True, "exact")


def components_packing(graph: Graph, k: int) -> Partition | None:
    """Zero-cut perfectly balanced partition, if the components can be packed.

    Components are placed largest first into k bins of capacity ceil(n/k);
    bins with equal load are interchangeable, so only the first is tried.
    """
    comps = connected_components(graph.n, graph.edges)
    if len(comps) > PACKING_LIMIT:
        raise TooLargeError(f"component packing limited to {PACKING_LIMIT} components, got {len(comps)}")
    cap = ceil_div(graph.n, k)
    order = sorted(range(len(comps)), key=lambda c: (-len(comps[c]), comps[c][0]))
    load = [0] * k
    bin_of = [-1] * len(comps)

    def place(t: int) -> bool:
        if t == len(order):
            return True
        comp = order[t]
        size = len(comps[comp])
        tried = set()
        for b in range(k):
            if load[b] + size > cap or load[b] in tried:
                continue
            tried.add(load[b])
            load[b] += size
            bin_of[comp] = b
            if place(t + 1):
                return True
            load[b] -= size
            bin_of[comp] = -1
        return False

    if not place(0):
        return None
    colour = [0] * graph.n
    for comp, b in zip(comps, bin_of):
        for v in comp:
            colour[v] = b
    return Partition(k, tuple(colour))


def snake_order(grid: GridGraph) -> list[int]:
    """Boustrophedon vertex order sweeping along the longer bounding-box side.

    Lines run across the shorter side, so every prefix of the order is cut off
    by at most (shorter side + 1) edges on a full rectangle. Square boxes are
    swept row by row.
    """
    x0, y0, x1, y1 = grid.bounding_box()
    if x1 - x0 > y1 - y0:
        def key(v):
            x, y = grid.coords[v]
            return (x, y if (x - x0) % 2 == 0 else -y)
    else:
        def key(v):
            x, y = grid.coords[v]
            return (y, x if (y - y0) % 2 == 0 else -x)
    return sorted(range(grid.n), key=key)


def snake_partition(grid: GridGraph, k: int) -> SolveResult:
    if grid.n == 0:
        raise InputError("empty grid")
    if not 1 <= k <= grid.n:
        raise InputError(f"need 1 <= k <= n, got k={k}, n={grid.n}")
    partition = block_partition(snake_order(grid), k)
    return SolveResult(partition, cut_size(grid, partition), False, "snake")


def _postorder(tree: TreeGraph) -> list[int]:
    order = []
    stack = [tree.root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(tree.children[v])
    order.reverse()
    return order


def tree_bisection_dp(tree: TreeGraph) -> SolveResult:
    """Exact minimum bisection of a tree in O(n^2).

    ``table[v][t]`` is the fewest cut edges inside v's subtree when exactly t
    of its vertices lie on v's side. Children are merged knapsack style; a
    child either stays on v's side (edge kept) or switches sides (edge cut).
    """
    n = tree.n
    if n == 1:
        return SolveResult(Partition(2, (0,)), 0, True, "tree-dp")
    inf = n + 1
    table: list[list[int] | None] = [None] * n
    size = [0] * n
    # choices[v][j][t] = (t before child j, t of child j, edge cut?)
    choices: list[list[list[tuple[int, int, bool] | None]]] = [[] for _ in range(n)]

    for v in _postorder(tree):
        cur = [inf, 0]
        cur_size = 1
        for c in tree.children[v]:
            child, cs = table[c], size[c]
            merged = [inf] * (cur_size + cs + 1)
            choice: list[tuple[int, int, bool] | None] = [None] * (cur_size + cs + 1)
            for t in range(1, cur_size + 1):
                if cur[t] >= inf:
                    continue
                for tc in range(1, cs + 1):
                    if child[tc] >= inf:
                        continue
                    cost = cur[t] + child[tc]
                    if cost < merged[t + tc]:
                        merged[t + tc] = cost
                        choice[t + tc] = (t, tc, False)
                    if cost + 1 < merged[t + cs - tc]:
                        merged[t + cs - tc] = cost + 1
                        choice[t + cs - tc] = (t, tc, True)
            choices[v].append(choice)
            cur, cur_size = merged, cur_size + cs
            table[c] = None
        table[v] = cur
        size[v] = cur_size

    root = tree.root
    final = table[root]
    target = min(sorted({ceil_div(n, 2), n // 2}, reverse=True), key=lambda t: final[t])

    side = [0] * n
    stack = [(root, target)]
    while stack:
        v, t = stack.pop()
        kids = tree.children[v]
        for j in range(len(kids) - 1, -1, -1):
            t_prev, tc, is_cut = choices[v][j][t]
            side[kids[j]] = side[v] ^ is_cut
            stack.append((kids[j], tc))
            t = t_prev
    partition = Partition(2, tuple(side))
    cut = cut_size(tree, partition)
    assert cut == final[target], (cut, final[target])
    return SolveResult(partition, cut, True, "tree-dp")


def cut_all_edges_tree(tree: TreeGraph, k: int) -> SolveResult:
    """Round-robin colouring in index order.

    Balanced by construction; the cut never exceeds n - 1 because a tree has
    only n - 1 edges.
    """
    if k < 1:
        raise InputError("k must be positive")
    partition = Partition(k, tuple(v % k for v in range(tree.n)))
    return SolveResult(partition, cut_size(tree, partition), False, "cut-all")
