"""Acceptance criteria, each run at its stated scale and time limit.

A summary line per criterion is printed at the end of the pytest run.
"""

import json
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

from kbalance import formats
from kbalance.core import GeneralGraph, GridGraph, InputError, TreeGraph, cut_size
from kbalance.cornercut import corner_cut_oracle
from kbalance.reductions import (GRID_FAMILIES, certificates, reduce, solve_count_grid_fptas,
                                 solve_count_grid_perfect, solve_count_tree)
from kbalance.render import render_svg
from kbalance.solvers import exact_balanced_mincut, snake_partition, tree_bisection_dp
from kbalance.tpart import ThreePartInstance, generate, solve_exact
from kbalance.verify import assemble_yes_partition, audit, decide_three_partition

from oracles import (grid_fptas_oracle, grid_perfect_oracle, min_balanced_cut, min_bisection,
                     tree_oracle)
from strategies import feasible_s

WORKED = ThreePartInstance(2, 16, (5, 5, 6, 5, 5, 6))
FAMILIES = ("grid-fptas", "grid-perfect", "tree")


class Clock:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        return False

    def check(self, label):
        print(f"{label}: {self.elapsed:.2f} s (limit {self.limit} s)")
        assert self.elapsed < self.limit, f"{label} took {self.elapsed:.2f} s, limit {self.limit} s"


# ---- 1 ---------------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_fixed_point_suite():
    draws = random.Random(20240501)
    params = [(draws.choice(FAMILIES), draws.randint(1, 5), draws.randint(1, 40),
               draws.choice((Fraction(0), Fraction(1, 8), Fraction(1, 4), Fraction(3, 8))),
               draws.randint(0, 2)) for _ in range(200)]
    with Clock(1.0) as clock:
        fptas = solve_count_grid_fptas(2, 16, 0, 0)
        perfect = solve_count_grid_perfect(2, 16, 0)
        tree = solve_count_tree(2, 16, 0, 0)
        traces = []
        for family, k, s, c, d in params:
            if family == "grid-fptas":
                traces.append(solve_count_grid_fptas(k, s, c, d))
            elif family == "grid-perfect":
                traces.append(solve_count_grid_perfect(k, s, c))
            else:
                traces.append(solve_count_tree(k, s, c, d))
    clock.check("fixed-point suite")
    assert (fptas.u, fptas.h, fptas.p) == (2592, 9, 81)
    assert (perfect.u, perfect.h, perfect.p) == (1152, 6, 36)
    assert (tree.u, tree.p) == (384, 12)
    # independent re-derivation by iterating each right-hand side to its fixed point
    assert grid_fptas_oracle(2, 16, 0, 0)[1] == 2592
    assert grid_perfect_oracle(2, 16, 0)[1] == 1152
    assert tree_oracle(2, 16, 0, 0)[1] == 384
    for trace in traces:
        assert trace.rhs_at_u == trace.u
        assert trace.u >= trace.n1


# ---- 2 ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def worked_bundles():
    return {family: reduce(WORKED, family) for family in FAMILIES}


@pytest.mark.criterion(2)
def test_worked_example_bundles_certified():
    with Clock(5.0) as clock:
        bundles = {family: reduce(WORKED, family) for family in FAMILIES}
        results = {family: certificates(b) for family, b in bundles.items()}
        solution = solve_exact(WORKED)
        audits = {family: audit(b, assemble_yes_partition(b, solution)) for family, b in bundles.items()}
    clock.check("build + certify + audit")
    for family, certs in results.items():
        failed = [(c.name, c.detail) for c in certs if not c.passed]
        assert not failed, f"{family}: {failed}"
        names = {c.name for c in certs}
        if family in GRID_FAMILIES:
            assert {"height exceeds alpha*m", "p exceeds (alpha*m)^2 + eps*n"} <= names
        else:
            assert {"p covers 3k*alpha + eps*n", "smallest star has 6k*alpha vertices"} <= names
    for family, outcome in audits.items():
        sizes = outcome.report.part_sizes
        assert outcome.balanced and max(sizes) - min(sizes) == 0, family
        assert outcome.report.minority_total == 0, family


@pytest.mark.criterion(2)
@pytest.mark.parametrize("family", FAMILIES)
def test_worked_example_assembled_cut_equals_m(worked_bundles, family):
    # Stated requirement: the assembled YES partition has cut exactly m = 5.
    # With the exact solver's triples (0,1,2),(3,4,5) only one connector joins
    # gadgets of different triples, so the cut is 1 (see the decisions ledger).
    bundle = worked_bundles[family]
    outcome = audit(bundle, assemble_yes_partition(bundle, solve_exact(WORKED)))
    assert outcome.report.cut_size == bundle.params.m


# ---- 3 ---------------------------------------------------------------------------

def _instances(mode, count, rng):
    found = []
    while len(found) < count:
        k = rng.randint(2, 3) if mode == "no" else rng.randint(1, 3)
        s = rng.choice([s for s in feasible_s(20) if s >= 7])
        try:
            found.append(generate(k, s, mode, rng.randrange(2**31), max_tries=200))
        except InputError:
            continue
    return found


@pytest.mark.criterion(3)
def test_general_family_decides_three_partition():
    rng = random.Random(3)
    with Clock(30.0) as clock:
        cases = [(i, "NO") for i in _instances("no", 20, rng)] + [(i, "YES") for i in _instances("yes", 20, rng)]
        agree = 0
        for inst, label in cases:
            truth = "YES" if solve_exact(inst) is not None else "NO"
            assert truth == label
            agree += decide_three_partition(reduce(inst, "general"), "components") == truth
    clock.check("40 decisions")
    print(f"agreement {agree}/{len(cases)}")
    assert agree == len(cases) == 40


# ---- 4 ---------------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_corner_cut_matches_quarter_square():
    mismatches = []
    with Clock(120.0) as clock:
        for b in range(6):
            for w in range(b + 1, 8):
                for h in range(b + 1, 8):
                    value = corner_cut_oracle(w, h, b)
                    if value != b * b // 4:
                        mismatches.append((w, h, b, value))
    clock.check("corner-cut sweep")
    assert not mismatches


# ---- 5 ---------------------------------------------------------------------------

@pytest.mark.criterion(5)
def test_snake_sweep():
    failures = []
    with Clock(10.0) as clock:
        for w in range(1, 31):
            for h in range(1, 31):
                grid = GridGraph.rectangle(w, h)
                for k in range(1, min(8, w * h) + 1):
                    res = snake_partition(grid, k)
                    sizes = res.partition.part_sizes
                    if max(sizes) > -(-grid.n // k) or max(sizes) - min(sizes) > 1:
                        failures.append((w, h, k, "balance"))
                    if res.cut > (k - 1) * (min(w, h) + 1):
                        failures.append((w, h, k, res.cut))
    clock.check("snake sweep")
    assert not failures


# ---- 6 ---------------------------------------------------------------------------

@pytest.mark.criterion(6)
def test_tree_dp_against_enumeration():
    rng = random.Random(6)
    with Clock(30.0) as clock:
        for _ in range(200):
            n = rng.randint(1, 10)
            tree = TreeGraph(tuple([-1] + [rng.randrange(v) for v in range(1, n)]))
            res = tree_bisection_dp(tree)
            assert res.cut == cut_size(tree, res.partition)
            assert res.cut == min_bisection(n, tree.edges)
    clock.check("200 trees")


# ---- 7 ---------------------------------------------------------------------------

def _random_connected(rng, n):
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.3:
                edges.add((i, j))
    return GeneralGraph(n, tuple(edges))


@pytest.mark.criterion(7)
def test_exact_solver_against_enumeration():
    rng = random.Random(7)
    graphs = [_random_connected(rng, rng.randint(2, 9)) for _ in range(100)]
    with Clock(60.0) as clock:
        for graph in graphs:
            for k in (2, 3):
                for eps in (Fraction(0), Fraction(1, 2)):
                    assert exact_balanced_mincut(graph, k, eps).cut == min_balanced_cut(
                        graph.n, graph.edges, k, eps)
    clock.check("400 exact solves")


# ---- 8 ---------------------------------------------------------------------------

@pytest.mark.criterion(8)
@pytest.mark.parametrize("family", ("general",) + FAMILIES)
def test_bundle_and_partition_round_trip(worked_bundles, family):
    bundle = worked_bundles.get(family) or reduce(WORKED, family)
    text = formats.dumps(formats.bundle_to_json(bundle))
    back = formats.bundle_from_json(json.loads(text))
    assert back == bundle
    assert formats.dumps(formats.bundle_to_json(back)) == text
    part = assemble_yes_partition(bundle, solve_exact(WORKED))
    ptext = formats.dumps(formats.partition_to_json(part))
    assert formats.partition_from_json(json.loads(ptext)) == part
    assert formats.dumps(formats.partition_to_json(formats.partition_from_json(json.loads(ptext)))) == ptext


@pytest.mark.criterion(8)
def test_rect3x3_svg_golden():
    golden = (Path(__file__).parent / "golden" / "rect3x3.svg").read_text(encoding="utf-8")
    assert render_svg(GridGraph.rectangle(3, 3)) == golden
