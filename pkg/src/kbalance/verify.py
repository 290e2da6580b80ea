"""Auditing partitions of reduction graphs and the 3-PARTITION decision procedure."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Literal, Union

import mpmath

from . import numeric
from .core import (CutReport, GridGraph, InputError, Partition, TreeGraph, block_partition,
                   cut_report, is_balanced, minority_count)
from .cornercut import max_separable
from .reductions import Certificate, ReductionBundle, certificates
from .solvers import (components_packing, cut_all_edges_tree, exact_balanced_mincut,
                      snake_partition, tree_bisection_dp)
from .tpart import TripleSolution, check_solution, solve_exact


class AuditError(InputError):
    """A partitioner broke its declared balance guarantee."""


class NoMajorityError(InputError):
    pass


@dataclass(frozen=True)
class AuditOutcome:
    report: CutReport
    balanced: bool
    cut_within_alpha_m: bool
    minority_ok: bool
    certificates: tuple[Certificate, ...]
    diagnostics: dict = field(default_factory=dict)

    @property
    def reduction_condition_ok(self) -> bool:
        """Low cut (at most alpha*m) must come with few minority vertices."""
        return self.minority_ok or not self.cut_within_alpha_m


def audit(bundle: ReductionBundle, partition: Partition) -> AuditOutcome:
    pr = bundle.params
    if partition.n != bundle.graph.n:
        raise InputError(f"partition has {partition.n} vertices, bundle graph has {bundle.graph.n}")
    if partition.k != pr.k:
        raise InputError(f"partition uses k={partition.k}, bundle expects k={pr.k}")
    report = cut_report(bundle.graph, partition, bundle.gadget_of)
    with mpmath.workdps(numeric.precision_for(pr.n) + 10):
        within = numeric.compare(Fraction(report.cut_size), pr.alpha * pr.m) <= 0
    minority_budget = pr.p - pr.epsilon * pr.n
    smallest_class_floor = (1 + pr.epsilon) * Fraction(pr.n, pr.k) - pr.epsilon * pr.n
    return AuditOutcome(
        report=report,
        balanced=is_balanced(partition, pr.epsilon),
        cut_within_alpha_m=within,
        minority_ok=report.minority_total < minority_budget,
        certificates=tuple(certificates(bundle)),
        diagnostics={
            "minority_budget": minority_budget,
            "smallest_class_floor": smallest_class_floor,
            "alpha_times_m": numeric.fmt(pr.alpha * pr.m),
        },
    )


def assemble_yes_partition(bundle: ReductionBundle, solution: TripleSolution) -> Partition:
    """Colour each gadget with the index of the triple holding its integer."""
    check_solution(bundle.source, solution)
    triple_of = solution.assignment()
    return Partition(bundle.params.k, tuple(triple_of[g] for g in bundle.gadget_of))


def extract_majority_assignment(bundle: ReductionBundle, partition: Partition) -> tuple[int, ...]:
    """Strict-majority colour of every gadget."""
    majority = minority_count(bundle.gadget_of, partition).majority_colour
    for g, colour in enumerate(majority):
        if colour is None:
            raise NoMajorityError(f"gadget {g} has no strict majority colour")
    return tuple(majority)


def _components(bundle: ReductionBundle) -> Partition:
    found = components_packing(bundle.graph, bundle.params.k)
    if found is not None:
        return found
    # no zero-cut balanced split exists; any balanced split will do
    return block_partition(range(bundle.graph.n), bundle.params.k)


def _exact(bundle: ReductionBundle) -> Partition:
    return exact_balanced_mincut(bundle.graph, bundle.params.k, bundle.params.epsilon).partition


def _snake(bundle: ReductionBundle) -> Partition:
    if not isinstance(bundle.graph, GridGraph):
        raise InputError("snake partitioner needs a grid graph")
    return snake_partition(bundle.graph, bundle.params.k).partition


def _tree_dp(bundle: ReductionBundle) -> Partition:
    if not isinstance(bundle.graph, TreeGraph) or bundle.params.k != 2:
        raise InputError("tree-dp needs a tree and k = 2")
    return tree_bisection_dp(bundle.graph).partition


def _cut_all(bundle: ReductionBundle) -> Partition:
    if not isinstance(bundle.graph, TreeGraph):
        raise InputError("cut-all needs a tree")
    return cut_all_edges_tree(bundle.graph, bundle.params.k).partition


def _assemble(bundle: ReductionBundle) -> Partition:
    solution = solve_exact(bundle.source)
    if solution is None:
        raise InputError("the 3-PARTITION instance has no solution to assemble")
    return assemble_yes_partition(bundle, solution)


PARTITIONERS: dict[str, Callable[[ReductionBundle], Partition]] = {
    "components": _components,
    "exact": _exact,
    "snake": _snake,
    "tree-dp": _tree_dp,
    "cut-all": _cut_all,
    "assemble": _assemble,
}


def decide_three_partition(bundle: ReductionBundle,
                           partitioner: Union[str, Callable[[ReductionBundle], Partition]] = "components",
                           alpha=None) -> Literal["YES", "NO"]:
    """Answer the source instance from one partitioner run: YES iff cut <= alpha * m.

    The answer is only trustworthy if the partitioner really approximates the
    optimal perfectly balanced cut within alpha at the bundle's epsilon.
    """
    run = PARTITIONERS[partitioner] if isinstance(partitioner, str) else partitioner
    pr = bundle.params
    partition = run(bundle)
    if partition.n != bundle.graph.n or partition.k != pr.k:
        raise AuditError("partitioner returned a partition of the wrong shape")
    if not is_balanced(partition, pr.epsilon):
        raise AuditError(f"partitioner broke the balance bound at epsilon={pr.epsilon}: "
                         f"part sizes {partition.part_sizes}")
    alpha = pr.alpha if alpha is None else alpha
    if not isinstance(alpha, (int, Fraction, mpmath.mpf)):
        alpha = Fraction(alpha)
    cut = cut_report(bundle.graph, partition).cut_size
    with mpmath.workdps(numeric.precision_for(pr.n) + 10):
        within = numeric.compare(Fraction(cut), alpha * pr.m) <= 0
    return "YES" if within else "NO"


def definition2_brute_check(grid: GridGraph, budget: int, bound) -> bool:
    """True iff every removal of at most ``budget`` edges splits off fewer than ``bound`` vertices."""
    return max_separable(grid.n, grid.edges, budget) < Fraction(bound)
