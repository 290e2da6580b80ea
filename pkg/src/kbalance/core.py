"""Graph types, partitions and the basic partition metrics.

Three graph shapes are used throughout the package:

* ``GeneralGraph``: plain vertex count plus an edge set.
* ``TreeGraph``: parent array with a single root (parent ``-1``).
* ``GridGraph``: integer lattice points plus an explicit subset of lattice
  edges. Two lattice-adjacent points are *not* implicitly joined.

All of them expose ``n`` and ``edges`` (a sorted tuple of ``(i, j)`` pairs with
``i < j``), which is everything the metrics below need.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union


class InputError(ValueError):
    """Malformed input or violated precondition."""


class TooLargeError(InputError):
    """A documented size guard was exceeded."""


Edge = tuple[int, int]


def _normalise_edges(n: int, edges: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    out = set()
    for e in edges:
        i, j = int(e[0]), int(e[1])
        if i == j:
            raise InputError(f"self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise InputError(f"edge ({i}, {j}) out of range for n={n}")
        key = (i, j) if i < j else (j, i)
        if key in out:
            raise InputError(f"duplicate edge {key}")
        out.add(key)
    return tuple(sorted(out))


@dataclass(frozen=True)
class GeneralGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InputError("negative vertex count")
        object.__setattr__(self, "edges", _normalise_edges(self.n, self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return adjacency(self.n, self.edges)


@dataclass(frozen=True)
class TreeGraph:
    """Rooted tree stored as a parent array; the root has parent ``-1``."""

    parent: tuple[int, ...]

    def __post_init__(self):
        parent = tuple(int(p) for p in self.parent)
        object.__setattr__(self, "parent", parent)
        n = len(parent)
        roots = [v for v, p in enumerate(parent) if p == -1]
        if n and len(roots) != 1:
            raise InputError(f"tree needs exactly one root, found {len(roots)}")
        for v, p in enumerate(parent):
            if p != -1 and not (0 <= p < n) or p == v:
                raise InputError(f"bad parent {p} for vertex {v}")
        # every vertex must reach the root without revisiting
        depth = [-1] * n
        for v in range(n):
            path = []
            on_path = set()
            u = v
            while u != -1 and depth[u] == -1:
                if u in on_path:
                    raise InputError("parent links contain a cycle")
                path.append(u)
                on_path.add(u)
                u = parent[u]
            base = 0 if u == -1 else depth[u] + 1
            for w in reversed(path):
                depth[w] = base
                base += 1

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], root: int = 0) -> "TreeGraph":
        edges = _normalise_edges(n, edges)
        if n and len(edges) != n - 1:
            raise InputError(f"a tree on {n} vertices has {n - 1} edges, got {len(edges)}")
        adj = adjacency(n, edges)
        parent = [-2] * n
        if n:
            parent[root] = -1
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if parent[w] == -2:
                        parent[w] = u
                        queue.append(w)
        if -2 in parent:
            raise InputError("edges do not form a connected tree")
        return cls(tuple(parent))

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def root(self) -> int:
        return self.parent.index(-1)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted((min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p != -1))

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        ch: list[list[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p != -1:
                ch[p].append(v)
        return tuple(tuple(c) for c in ch)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return adjacency(self.n, self.edges)


Point = tuple[int, int]

# clockwise rotation order around a lattice vertex
_DIRECTIONS = ((0, 1), (1, 0), (0, -1), (-1, 0))  # N, E, S, W


@dataclass(frozen=True)
class GridGraph:
    """Finite subgraph of the infinite 2D lattice.

    ``coords`` must be lexicographically sorted and distinct; ``edges`` index
    into ``coords`` and each must join points at L1 distance exactly 1.
    """

    coords: tuple[Point, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        coords = tuple((int(x), int(y)) for x, y in self.coords)
        for a, b in zip(coords, coords[1:]):
            if not a < b:
                raise InputError(f"coords not strictly sorted at {a}, {b}")
        object.__setattr__(self, "coords", coords)
        edges = _normalise_edges(len(coords), self.edges)
        for i, j in edges:
            (x1, y1), (x2, y2) = coords[i], coords[j]
            if abs(x1 - x2) + abs(y1 - y2) != 1:
                raise InputError(f"edge {coords[i]}-{coords[j]} is not a lattice edge")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_points(cls, points: Iterable[Point], edges: Iterable[tuple[Point, Point]]) -> "GridGraph":
        """Build from coordinate pairs; edges given as point pairs."""
        coords = sorted(set((int(x), int(y)) for x, y in points))
        index = {c: i for i, c in enumerate(coords)}
        try:
            idx = [(index[tuple(a)], index[tuple(b)]) for a, b in edges]
        except KeyError as exc:
            raise InputError(f"edge endpoint {exc.args[0]} is not a vertex") from None
        return cls(tuple(coords), tuple(idx))

    @classmethod
    def rectangle(cls, width: int, height: int, origin: Point = (0, 0)) -> "GridGraph":
        """Full ``width`` x ``height`` rectangle with every lattice edge."""
        if width < 1 or height < 1:
            raise InputError("rectangle sides must be positive")
        x0, y0 = origin
        coords = tuple((x0 + x, y0 + y) for x in range(width) for y in range(height))
        edges = []
        for x in range(width):
            for y in range(height):
                v = x * height + y
                if y + 1 < height:
                    edges.append((v, v + 1))
                if x + 1 < width:
                    edges.append((v, v + height))
        return cls(coords, tuple(edges))

    @property
    def n(self) -> int:
        return len(self.coords)

    @cached_property
    def index(self) -> dict[Point, int]:
        return {c: i for i, c in enumerate(self.coords)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return adjacency(self.n, self.edges)

    def bounding_box(self) -> tuple[int, int, int, int]:
        xs = [x for x, _ in self.coords]
        ys = [y for _, y in self.coords]
        return min(xs), min(ys), max(xs), max(ys)


Graph = Union[GeneralGraph, TreeGraph, GridGraph]


@dataclass(frozen=True)
class Partition:
    k: int
    colour: tuple[int, ...]

    def __post_init__(self):
        colour = tuple(int(c) for c in self.colour)
        object.__setattr__(self, "colour", colour)
        if self.k < 1:
            raise InputError("k must be at least 1")
        for v, c in enumerate(colour):
            if not 0 <= c < self.k:
                raise InputError(f"colour {c} of vertex {v} outside [0, {self.k})")

    @property
    def n(self) -> int:
        return len(self.colour)

    @cached_property
    def part_sizes(self) -> tuple[int, ...]:
        counts = Counter(self.colour)
        return tuple(counts.get(c, 0) for c in range(self.k))


@dataclass(frozen=True)
class MinorityReport:
    minority_total: int
    majority_colour: tuple[int | None, ...]
    minority_per_gadget: tuple[int, ...]


@dataclass(frozen=True)
class CutReport:
    cut_size: int
    part_sizes: tuple[int, ...]
    max_part: int
    minority_total: int = 0
    majority_colour: tuple[int | None, ...] = field(default=())


def adjacency(n: int, edges: Iterable[Edge]) -> tuple[tuple[int, ...], ...]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    return tuple(tuple(a) for a in adj)


def connected_components(n: int, edges: Iterable[Edge]) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    adj = adjacency(n, edges)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _check_cover(graph: Graph, partition: Partition):
    if partition.n != graph.n:
        raise InputError(f"partition covers {partition.n} vertices, graph has {graph.n}")


def cut_size(graph: Graph, partition: Partition) -> int:
    """Number of edges whose endpoints receive different colours."""
    _check_cover(graph, partition)
    col = partition.colour
    return sum(1 for i, j in graph.edges if col[i] != col[j])


def as_fraction(value) -> Fraction:
    """Exact rational from int, Fraction, ``"a/b"`` string, float or ``(num, den)`` pair."""
    if isinstance(value, (tuple, list)):
        num, den = value
        return Fraction(int(num), int(den))
    return Fraction(value)


def size_bound(n: int, k: int, epsilon=0) -> Fraction:
    """Largest allowed part size, ``(1 + eps) * ceil(n / k)``, as an exact rational."""
    eps = as_fraction(epsilon)
    if eps < 0:
        raise InputError(f"epsilon must be nonnegative, got {eps}")
    return (1 + eps) * -(-n // k)


def is_balanced(partition: Partition, epsilon=0) -> bool:
    bound = size_bound(partition.n, partition.k, epsilon)
    return all(size <= bound for size in partition.part_sizes)


def minority_count(gadget_of: Sequence[int], partition: Partition) -> MinorityReport:
    """Count minority vertices per gadget.

    A vertex is a minority vertex when fewer than half of its gadget shares its
    colour; exactly half is not minority. The majority colour of a gadget is
    the colour held by strictly more than half of it, or ``None``.
    """
    if len(gadget_of) != partition.n:
        raise InputError("gadget map and partition differ in length")
    counts: dict[int, Counter] = {}
    for g, c in zip(gadget_of, partition.colour):
        counts.setdefault(g, Counter())[c] += 1
    gadgets = range(max(counts) + 1) if counts else range(0)
    majority: list[int | None] = []
    per_gadget = []
    for g in gadgets:
        cnt = counts.get(g, Counter())
        size = sum(cnt.values())
        # 2 * share < size  <=>  share < size / 2
        per_gadget.append(sum(share for share in cnt.values() if 2 * share < size))
        major = [c for c, share in cnt.items() if 2 * share > size]
        majority.append(major[0] if major else None)
    return MinorityReport(sum(per_gadget), tuple(majority), tuple(per_gadget))


def cut_report(graph: Graph, partition: Partition, gadget_of: Sequence[int] | None = None) -> CutReport:
    sizes = partition.part_sizes
    minority = minority_count(gadget_of, partition) if gadget_of is not None else None
    return CutReport(
        cut_size=cut_size(graph, partition),
        part_sizes=sizes,
        max_part=max(sizes) if sizes else 0,
        minority_total=minority.minority_total if minority else 0,
        majority_colour=minority.majority_colour if minority else (),
    )


def trace_faces(grid: GridGraph) -> list[tuple[int, int]]:
    """Trace the faces of the lattice embedding of ``grid``.

    Returns ``(boundary_length, twice_signed_area)`` per face. Bounded faces
    are traversed counter-clockwise, so the outer face has the smallest area.
    """
    coords = grid.coords
    index = grid.index
    edge_set = set(grid.edges)
    # rotation[v][d] = neighbour in direction d or -1
    rotation = []
    for v, (x, y) in enumerate(coords):
        row = []
        for dx, dy in _DIRECTIONS:
            w = index.get((x + dx, y + dy), -1)
            if w != -1 and (min(v, w), max(v, w)) not in edge_set:
                w = -1
            row.append(w)
        rotation.append(row)

    def direction(v: int, w: int) -> int:
        (x1, y1), (x2, y2) = coords[v], coords[w]
        return _DIRECTIONS.index((x2 - x1, y2 - y1))

    visited = set()
    faces = []
    for i, j in grid.edges:
        for start in ((i, j), (j, i)):
            if start in visited:
                continue
            length = 0
            area2 = 0
            u, v = start
            while (u, v) not in visited:
                visited.add((u, v))
                length += 1
                (xu, yu), (xv, yv) = coords[u], coords[v]
                area2 += xu * yv - xv * yu
                d = direction(v, u)
                for step in range(1, 5):
                    w = rotation[v][(d + step) % 4]
                    if w != -1:
                        break
                u, v = v, w
            faces.append((length, area2))
    return faces


def is_solid(grid: GridGraph) -> bool:
    """Connected and without holes (no bounded face with more than four edges)."""
    if grid.n == 0:
        return False
    if len(connected_components(grid.n, grid.edges)) != 1:
        return False
    faces = trace_faces(grid)
    if not faces:
        return True
    outer = min(range(len(faces)), key=lambda f: faces[f][1])
    return all(length == 4 for f, (length, _) in enumerate(faces) if f != outer)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def balanced_sizes(n: int, k: int) -> list[int]:
    """Part sizes of a perfectly balanced split, larger parts first."""
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def block_partition(order: Sequence[int], k: int) -> Partition:
    """Colour consecutive runs of ``order`` with colours 0..k-1 at balanced sizes."""
    colour = [0] * len(order)
    pos = 0
    for c, size in enumerate(balanced_sizes(len(order), k)):
        for v in order[pos:pos + size]:
            colour[v] = c
        pos += size
    return Partition(k, tuple(colour))


__all__ = [
    "InputError", "TooLargeError", "GeneralGraph", "TreeGraph", "GridGraph", "Graph",
    "Partition", "CutReport", "MinorityReport", "cut_size", "is_balanced", "minority_count",
    "cut_report", "is_solid", "trace_faces", "connected_components", "adjacency",
    "size_bound", "as_fraction", "ceil_div", "balanced_sizes", "block_partition",
]
