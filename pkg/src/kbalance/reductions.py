"""Reduction graphs built from 3-PARTITION instances.

Each family glues 3k gadgets (one per integer a_i, with p * a_i vertices)
through m connector edges:

* ``general``: disjoint paths on 2 a_i vertices, m = 0.
* ``grid-fptas`` / ``grid-perfect``: h x (h a_i) rectangles in a row, joined
  at their bottom corners, m = 3k - 1.
* ``tree``: stars joined through their centres, m = 3k - 1.

For the grid and tree families the gadget size depends on the total vertex
count n through alpha, so n is found first as the fixed point of the
family's count equation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

import mpmath

from . import numeric
from .core import (GeneralGraph, GridGraph, InputError, TooLargeError, TreeGraph,
                   as_fraction, connected_components)
from .numeric import Real, ceil_real, ceil_sqrt, compare, power
from .tpart import KS_LIMIT, ThreePartInstance

Family = Literal["general", "grid-fptas", "grid-perfect", "tree"]
FAMILIES = ("general", "grid-fptas", "grid-perfect", "tree")
GRID_FAMILIES = ("grid-fptas", "grid-perfect")

# largest graph the builders will materialise
BUILD_LIMIT = 10**6


class FixedPointError(ArithmeticError):
    """RHS(u) != u for the computed count; indicates a precision bug."""


@dataclass(frozen=True)
class FixedPointTrace:
    family: str
    k: int
    s: int
    c: Fraction
    d: Fraction
    n1: Real
    u: int
    rhs_at_u: int

    @property
    def p(self) -> int:
        return self.u // (self.k * self.s)

    @property
    def h(self) -> int | None:
        if self.family in GRID_FAMILIES:
            return math.isqrt(self.p)
        return None


@dataclass(frozen=True)
class ReductionParams:
    family: str
    k: int
    s: int
    c: Fraction
    d: Fraction
    epsilon: Fraction
    alpha: Real
    p: int
    m: int
    n: int
    h: int | None = None

    def __post_init__(self):
        if self.n != self.p * self.k * self.s:
            raise InputError(f"n = {self.n} but p*k*s = {self.p * self.k * self.s}")
        expected_m = 0 if self.family == "general" else 3 * self.k - 1
        if self.m != expected_m:
            raise InputError(f"m = {self.m}, expected {expected_m} for {self.family}")


@dataclass(frozen=True)
class ReductionBundle:
    params: ReductionParams
    graph: Union[GridGraph, TreeGraph, GeneralGraph]
    gadget_of: tuple[int, ...]
    connector_edges: tuple[tuple[int, int], ...]
    source: ThreePartInstance

    @property
    def family(self) -> str:
        return self.params.family

    def gadget_sizes(self) -> list[int]:
        sizes = [0] * (3 * self.params.k)
        for g in self.gadget_of:
            sizes[g] += 1
        return sizes


@dataclass(frozen=True)
class Certificate:
    name: str
    passed: bool
    detail: str = ""


def _setup(k, s, c, d):
    k, s = int(k), int(s)
    c, d = as_fraction(c), as_fraction(d)
    if k < 1 or s < 1:
        raise InputError("k and s must be positive")
    if k * s > KS_LIMIT:
        raise TooLargeError(f"k*s = {k * s} exceeds the guard {KS_LIMIT}")
    if c < 0 or d < 0:
        raise InputError("exponents c and d must be nonnegative")
    return k, s, c, d


def _working_digits(log10_n1: float) -> int:
    return int(log10_n1) + 1 + numeric.GUARD_DIGITS + 10


def _close(family, k, s, c, d, n1, rhs) -> FixedPointTrace:
    u = rhs(n1)
    rhs_u = rhs(Fraction(u))
    if rhs_u != u:
        raise FixedPointError(f"{family}: RHS({u}) = {rhs_u}, not a fixed point")
    return FixedPointTrace(family, k, s, c, d, n1, u, rhs_u)


def solve_count_grid_fptas(k, s, c, d) -> FixedPointTrace:
    """Vertex count of the near-balanced grid construction (eps = 1/(2ks)).

    Solves n = ceil(sqrt((3k n^c (2ks)^d)^2 + n/(2ks)))^2 * ks, starting from
    the fixed point n1 of the ceiling-free right-hand side.
    """
    k, s, c, d = _setup(k, s, c, d)
    if c >= Fraction(1, 2):
        raise InputError(f"grid construction needs c < 1/2, got {c}")
    ks2 = 2 * k * s
    log_n1 = (math.log10(18 * k**3 * s) + 2 * float(d) * math.log10(ks2)) / float(1 - 2 * c)
    with mpmath.workdps(_working_digits(log_n1)):
        scale = 9 * k * k * power(Fraction(ks2), 2 * d)
        n1 = power(18 * k**3 * s * power(Fraction(ks2), 2 * d), 1 / (1 - 2 * c))

        def rhs(n: Real) -> int:
            return ceil_sqrt(scale * power(n, 2 * c) + n / ks2) ** 2 * k * s

        return _close("grid-fptas", k, s, c, d, n1, rhs)


def solve_count_grid_perfect(k, s, c) -> FixedPointTrace:
    """Vertex count of the perfectly balanced grid construction (eps = 0)."""
    k, s, c, d = _setup(k, s, c, 0)
    if c >= Fraction(1, 2):
        raise InputError(f"grid construction needs c < 1/2, got {c}")
    log_n1 = math.log10(9 * k**3 * s) / float(1 - 2 * c)
    with mpmath.workdps(_working_digits(log_n1)):
        n1 = power(Fraction(9 * k**3 * s), 1 / (1 - 2 * c))

        def rhs(n: Real) -> int:
            return ceil_real(3 * k * power(n, c)) ** 2 * k * s

        return _close("grid-perfect", k, s, c, d, n1, rhs)


def solve_count_tree(k, s, c, d) -> FixedPointTrace:
    """Vertex count of the star-path construction: n = ceil(3k n^c (2ks)^d + n/(2ks)) * ks."""
    k, s, c, d = _setup(k, s, c, d)
    if c >= 1:
        raise InputError(f"tree construction needs c < 1, got {c}")
    ks2 = 2 * k * s
    log_n1 = (math.log10(6 * k * k * s) + float(d) * math.log10(ks2)) / float(1 - c)
    with mpmath.workdps(_working_digits(log_n1)):
        scale = 3 * k * power(Fraction(ks2), d)
        n1 = power(6 * k * k * s * power(Fraction(ks2), d), 1 / (1 - c))

        def rhs(n: Real) -> int:
            return ceil_real(scale * power(n, c) + n / ks2) * k * s

        return _close("tree", k, s, c, d, n1, rhs)


def solve_count(family: str, k, s, c=0, d=0) -> FixedPointTrace:
    if family == "grid-fptas":
        return solve_count_grid_fptas(k, s, c, d)
    if family == "grid-perfect":
        if as_fraction(d) != 0:
            raise InputError("grid-perfect takes no d exponent")
        return solve_count_grid_perfect(k, s, c)
    if family == "tree":
        return solve_count_tree(k, s, c, d)
    raise InputError(f"no count equation for family {family!r}")


def alpha_for(family: str, k: int, s: int, c, d, n: int) -> Real:
    """Cut-size ratio realised by a built graph with n vertices."""
    c, d = as_fraction(c), as_fraction(d)
    if family == "general":
        return Fraction(1)
    with mpmath.workdps(numeric.precision_for(n) + 10):
        alpha = power(Fraction(n), c)
        if family != "grid-perfect":
            alpha = alpha * power(Fraction(2 * k * s), d)
        return alpha


def epsilon_for(family: str, k: int, s: int) -> Fraction:
    return Fraction(0) if family == "grid-perfect" else Fraction(1, 2 * k * s)


def params_from_trace(trace: FixedPointTrace) -> ReductionParams:
    fam, k, s = trace.family, trace.k, trace.s
    return ReductionParams(
        family=fam, k=k, s=s, c=trace.c, d=trace.d,
        epsilon=epsilon_for(fam, k, s),
        alpha=alpha_for(fam, k, s, trace.c, trace.d, trace.u),
        p=trace.p, m=3 * k - 1, n=trace.u, h=trace.h,
    )


def general_params(k: int, s: int) -> ReductionParams:
    return ReductionParams(family="general", k=k, s=s, c=Fraction(0), d=Fraction(0),
                           epsilon=epsilon_for("general", k, s), alpha=Fraction(1),
                           p=2, m=0, n=2 * k * s)


def _resolve(instance: ThreePartInstance, params, families) -> ReductionParams:
    if isinstance(params, FixedPointTrace):
        params = params_from_trace(params)
    if params.family not in families:
        raise InputError(f"parameters for {params.family!r}, expected one of {families}")
    if (params.k, params.s) != (instance.k, instance.s):
        raise InputError(f"parameters are for (k={params.k}, s={params.s}), instance has "
                         f"(k={instance.k}, s={instance.s})")
    total = sum(params.p * a for a in instance.a)
    if total != params.n:
        raise InputError(f"sum of p*a_i = {total} does not match n = {params.n}")
    if params.n > BUILD_LIMIT:
        raise TooLargeError(f"n = {params.n} exceeds the build limit {BUILD_LIMIT}")
    return params


def build_grid_reduction(instance: ThreePartInstance, params) -> ReductionBundle:
    """Row of h x (h a_i) rectangles placed flush, one connector edge per neighbour pair.

    Gadget i occupies columns starting at sum_{j<i} h a_j. Adjacent gadgets
    share no lattice edge except the connector along y = 0, which keeps the
    graph solid while the gadgets stay separated above the bottom row.
    """
    params = _resolve(instance, params, GRID_FAMILIES)
    h = params.h
    if h is None or h * h != params.p:
        raise InputError(f"grid parameters need p = h^2, got p={params.p}, h={h}")
    coords = []
    edges = []
    gadget_of = []
    connectors = []
    x0 = 0
    for g, a in enumerate(instance.a):
        width = h * a
        for x in range(x0, x0 + width):
            for y in range(h):
                v = x * h + y
                coords.append((x, y))
                gadget_of.append(g)
                if y + 1 < h:
                    edges.append((v, v + 1))
                if x + 1 < x0 + width:
                    edges.append((v, v + h))
        if g + 1 < len(instance.a):
            right = (x0 + width - 1) * h
            connectors.append((right, right + h))
        x0 += width
    graph = GridGraph(tuple(coords), tuple(edges) + tuple(connectors))
    return ReductionBundle(params, graph, tuple(gadget_of), tuple(connectors), instance)


def build_tree_reduction(instance: ThreePartInstance, params) -> ReductionBundle:
    """Stars with p a_i vertices each, centres joined in a path; vertex 0 is the root."""
    params = _resolve(instance, params, ("tree",))
    parent = []
    gadget_of = []
    connectors = []
    prev_centre = -1
    for g, a in enumerate(instance.a):
        centre = len(parent)
        parent.append(prev_centre)
        if prev_centre != -1:
            connectors.append((prev_centre, centre))
        parent.extend([centre] * (params.p * a - 1))
        gadget_of.extend([g] * (params.p * a))
        prev_centre = centre
    return ReductionBundle(params, TreeGraph(tuple(parent)), tuple(gadget_of), tuple(connectors), instance)


def build_general_reduction(instance: ThreePartInstance) -> ReductionBundle:
    """Disjoint paths on 2 a_i vertices; no connector edges."""
    params = _resolve(instance, general_params(instance.k, instance.s), ("general",))
    edges = []
    gadget_of = []
    start = 0
    for g, a in enumerate(instance.a):
        size = 2 * a
        edges.extend((v, v + 1) for v in range(start, start + size - 1))
        gadget_of.extend([g] * size)
        start += size
    return ReductionBundle(params, GeneralGraph(start, tuple(edges)), tuple(gadget_of), (), instance)


def reduce(instance: ThreePartInstance, family: str, c=0, d=0) -> ReductionBundle:
    """Count vertices (if needed) and build the reduction graph for ``family``."""
    if family == "general":
        return build_general_reduction(instance)
    trace = solve_count(family, instance.k, instance.s, c, d)
    if family == "tree":
        return build_tree_reduction(instance, trace)
    if family in GRID_FAMILIES:
        return build_grid_reduction(instance, trace)
    raise InputError(f"unknown family {family!r}")


def structure_ok(bundle: ReductionBundle) -> bool:
    """Removing the connector edges leaves exactly the 3k gadgets, of sizes p a_i."""
    pr = bundle.params
    connectors = set(bundle.connector_edges)
    if len(connectors) != pr.m:
        return False
    inner = [e for e in bundle.graph.edges if e not in connectors]
    if len(inner) != len(bundle.graph.edges) - len(connectors):
        return False
    comps = connected_components(bundle.graph.n, inner)
    if len(comps) != 3 * pr.k:
        return False
    for comp in comps:
        gadgets = {bundle.gadget_of[v] for v in comp}
        if len(gadgets) != 1:
            return False
        g = gadgets.pop()
        if len(comp) != pr.p * bundle.source.a[g]:
            return False
    for i, j in connectors:
        if bundle.gadget_of[i] == bundle.gadget_of[j]:
            return False
    return True


def _check(name: str, lhs: Real, op: str, rhs: Real) -> Certificate:
    sign = compare(lhs, rhs)
    passed = {">": sign > 0, ">=": sign >= 0, "==": sign == 0}[op]
    return Certificate(name, passed, f"{numeric.fmt(lhs)} {op} {numeric.fmt(rhs)}")


def certificates(bundle: ReductionBundle) -> list[Certificate]:
    """Analytic checks that make the bundle a member of a reduction set."""
    pr = bundle.params
    n, m, p, eps, alpha = pr.n, pr.m, pr.p, pr.epsilon, pr.alpha
    out = [
        Certificate("size identity", sum(p * a for a in bundle.source.a) == n == pr.p * pr.k * pr.s,
                    f"sum p*a_i = {sum(p * a for a in bundle.source.a)}, n = {n}"),
        Certificate("gadget structure", structure_ok(bundle)),
    ]
    with mpmath.workdps(numeric.precision_for(n) + 10):
        am = alpha * m
        if pr.family in GRID_FAMILIES:
            out.append(_check("height exceeds alpha*m", Fraction(pr.h), ">", am))
            out.append(_check("p exceeds (alpha*m)^2 + eps*n", Fraction(p), ">", am * am + eps * n))
        elif pr.family == "tree":
            out.append(_check("p covers 3k*alpha + eps*n", Fraction(p), ">=", 3 * pr.k * alpha + eps * n))
            smallest = min(p * a for a in bundle.source.a)
            out.append(_check("smallest star has 6k*alpha vertices", Fraction(smallest), ">=", 6 * pr.k * alpha))
        else:
            out.append(_check("alpha*m is zero", Fraction(am), "==", Fraction(0)))
            out.append(_check("p - eps*n is one", p - eps * n, "==", Fraction(1)))
    return out
