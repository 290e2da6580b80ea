from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from kbalance.core import InputError, TooLargeError, connected_components, is_solid
from kbalance.reductions import (BUILD_LIMIT, GRID_FAMILIES, build_grid_reduction, build_tree_reduction,
                                 certificates, general_params, params_from_trace, reduce, solve_count,
                                 solve_count_grid_fptas, solve_count_grid_perfect, solve_count_tree)
from kbalance.tpart import ThreePartInstance, generate

from oracles import grid_fptas_oracle, grid_perfect_oracle, tree_oracle
from strategies import feasible_s

WORKED = ThreePartInstance(2, 16, (5, 5, 6, 5, 5, 6))
SMALL = ThreePartInstance(1, 10, (3, 3, 4))


# ---- vertex counts -----------------------------------------------------------

@pytest.mark.parametrize("k,s,c,d,n1,u,h", [
    (2, 16, 0, 0, 2304, 2592, 9),
    (1, 10, 0, 0, 180, 250, 5),
    (2, 16, Fraction(1, 4), 0, 5308416, 5326848, 408),
])
def test_grid_fptas_counts(k, s, c, d, n1, u, h):
    trace = solve_count_grid_fptas(k, s, c, d)
    assert trace.n1 == n1 and trace.u == u
    assert trace.h == h and trace.p == h * h
    assert trace.rhs_at_u == u
    o_n1, o_u = grid_fptas_oracle(k, s, c, d)
    assert o_u == u and abs(o_n1 - n1) < 1e-50


@pytest.mark.parametrize("k,s,c,n1,u,h", [
    (2, 16, 0, 1152, 1152, 6),
    (1, 10, 0, 90, 90, 3),
    (2, 16, Fraction(1, 4), 1327104, 1331712, 204),
])
def test_grid_perfect_counts(k, s, c, n1, u, h):
    trace = solve_count_grid_perfect(k, s, c)
    assert trace.n1 == n1 and trace.u == u and trace.h == h
    assert grid_perfect_oracle(k, s, c)[1] == u


@pytest.mark.parametrize("k,s,c,d,n1,u,p", [
    (2, 16, 0, 0, 384, 384, 12),
    (1, 10, 0, 0, 60, 60, 6),
    (2, 16, Fraction(1, 2), 0, 147456, 147456, 4608),
])
def test_tree_counts(k, s, c, d, n1, u, p):
    trace = solve_count_tree(k, s, c, d)
    assert trace.n1 == n1 and trace.u == u and trace.p == p
    assert tree_oracle(k, s, c, d)[1] == u


def test_rational_exponent_uses_exact_arithmetic():
    # n1 = 2304^2 is an integer, so no floating approximation should leak through
    assert isinstance(solve_count_grid_fptas(2, 16, Fraction(1, 4), 0).n1, Fraction)


def test_exponent_limits():
    with pytest.raises(InputError):
        solve_count_grid_fptas(2, 16, Fraction(1, 2), 0)
    with pytest.raises(InputError):
        solve_count_grid_perfect(2, 16, Fraction(3, 4))
    with pytest.raises(InputError):
        solve_count_tree(2, 16, 1, 0)
    with pytest.raises(InputError):
        solve_count_tree(2, 16, Fraction(-1, 2), 0)


def test_ks_guard():
    with pytest.raises(TooLargeError):
        solve_count_tree(1000, 1001, 0, 0)


def _rhs_oracle(family, k, s, c, d):
    if family == "grid-fptas":
        return grid_fptas_oracle(k, s, c, d)
    if family == "grid-perfect":
        return grid_perfect_oracle(k, s, c)
    return tree_oracle(k, s, c, d)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(("grid-fptas", "grid-perfect", "tree")), st.integers(1, 5), st.integers(1, 40),
       st.sampled_from((0, Fraction(1, 8), Fraction(1, 4), Fraction(3, 8))), st.integers(0, 2))
def test_fixed_point_property(family, k, s, c, d):
    if family == "grid-perfect":
        d = 0
    trace = solve_count(family, k, s, c, d)
    assert trace.rhs_at_u == trace.u
    assert trace.u >= trace.n1
    assert trace.u % (k * s) == 0
    if family in GRID_FAMILIES:
        assert trace.h ** 2 == trace.p
    # the oracle iterates from n1 at 300 digits; it must land on the same value
    assert _rhs_oracle(family, k, s, c, d)[1] == trace.u


# ---- builders ---------------------------------------------------------------

def _gadget_boxes(bundle):
    boxes = {}
    for v, g in enumerate(bundle.gadget_of):
        x, y = bundle.graph.coords[v]
        x0, y0, x1, y1 = boxes.get(g, (x, y, x, y))
        boxes[g] = (min(x0, x), min(y0, y), max(x1, x), max(y1, y))
    return [(x1 - x0 + 1, y1 - y0 + 1) for _, (x0, y0, x1, y1) in sorted(boxes.items())]


def test_grid_build_worked_example():
    bundle = reduce(WORKED, "grid-fptas")
    assert bundle.graph.n == 2592 and bundle.params.m == 5
    # each rectangle is h * a_i columns wide and h rows tall
    assert _gadget_boxes(bundle) == [(45, 9), (45, 9), (54, 9), (45, 9), (45, 9), (54, 9)]
    assert bundle.gadget_sizes() == [405, 405, 486, 405, 405, 486]


def test_grid_perfect_build_small():
    bundle = reduce(SMALL, "grid-perfect")
    assert bundle.graph.n == 90 and bundle.params.m == 2
    assert _gadget_boxes(bundle) == [(9, 3), (9, 3), (12, 3)]
    assert bundle.params.epsilon == 0


def test_tree_build_worked_example():
    bundle = reduce(WORKED, "tree")
    assert bundle.gadget_sizes() == [60, 60, 72, 60, 60, 72]
    assert bundle.graph.n == 384 and bundle.params.m == 5
    assert bundle.graph.root == 0


def test_tree_build_small():
    bundle = reduce(SMALL, "tree")
    assert bundle.gadget_sizes() == [18, 18, 24]


def test_star_centre_degrees():
    bundle = reduce(WORKED, "tree")
    adj = bundle.graph.adjacency
    centres = [u for e in bundle.connector_edges for u in e]
    for g in range(6):
        members = [v for v, h in enumerate(bundle.gadget_of) if h == g]
        centre = max(members, key=lambda v: len(adj[v]))
        path_edges = sum(1 for e in bundle.connector_edges if centre in e)
        assert path_edges == (1 if g in (0, 5) else 2)
        assert len(adj[centre]) == len(members) - 1 + path_edges
        assert all(len(adj[v]) == 1 for v in members if v != centre)
        assert centre in centres


def test_general_build():
    bundle = reduce(WORKED, "general")
    assert bundle.gadget_sizes() == [10, 10, 12, 10, 10, 12]
    assert bundle.graph.n == 64
    assert len(connected_components(64, bundle.graph.edges)) == 6
    assert bundle.params.alpha == 1 and bundle.params.epsilon == Fraction(1, 64)
    assert general_params(1, 10).n == 20


def test_grid_bundles_are_solid():
    for family in GRID_FAMILIES:
        assert is_solid(reduce(WORKED, family).graph)
        assert is_solid(reduce(SMALL, family).graph)


def test_param_mismatch_rejected():
    trace = solve_count_tree(1, 10, 0, 0)
    with pytest.raises(InputError):
        build_tree_reduction(WORKED, trace)
    with pytest.raises(InputError):
        build_grid_reduction(SMALL, trace)


def test_build_limit():
    # c = 1/4 gives u above a million vertices for the worked example
    trace = solve_count_grid_perfect(2, 16, Fraction(1, 4))
    assert trace.u > BUILD_LIMIT
    with pytest.raises(TooLargeError):
        build_grid_reduction(WORKED, params_from_trace(trace))


@pytest.mark.parametrize("family", ("general", "grid-fptas", "grid-perfect", "tree"))
def test_worked_example_certificates(family):
    certs = certificates(reduce(WORKED, family))
    assert all(c.passed for c in certs), [(c.name, c.detail) for c in certs if not c.passed]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(("general", "grid-fptas", "grid-perfect", "tree")), st.integers(1, 3),
       st.sampled_from([s for s in feasible_s(20) if s >= 6]), st.integers(0, 1000),
       st.sampled_from((0, Fraction(1, 8))), st.integers(0, 1))
def test_certificates_hold(family, k, s, seed, c, d):
    if family == "grid-perfect":
        d = 0
    inst = generate(k, s, "random", seed)
    if family != "general" and solve_count(family, k, s, c, d).u > 50_000:
        return  # keep the build cheap; counts alone are covered above
    bundle = reduce(inst, family, c, d)
    certs = certificates(bundle)
    assert all(cert.passed for cert in certs), [(x.name, x.detail) for x in certs if not x.passed]
    assert sum(bundle.params.p * a for a in inst.a) == bundle.graph.n
    if family in GRID_FAMILIES:
        assert is_solid(bundle.graph)
