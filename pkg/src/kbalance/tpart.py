"""3-PARTITION instances, an exact backtracking solver and a seeded generator."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal, Mapping

from .core import InputError, TooLargeError

# Strongly NP-hard, so unary-scale instances are the regime of interest.
KS_LIMIT = 10**6
SOLVER_LIMIT = 24  # max 3k for solve_exact
NO_RETRIES = 10_000


class InvalidInstance(InputError):
    pass


def value_range(s: int) -> tuple[int, int]:
    """Inclusive integer range strictly between s/4 and s/2."""
    return s // 4 + 1, (s - 1) // 2


@dataclass(frozen=True)
class ThreePartInstance:
    k: int
    s: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.k < 1:
            raise InvalidInstance(f"k must be positive, got {self.k}")
        if self.s < 1:
            raise InvalidInstance(f"s must be positive, got {self.s}")
        if self.k * self.s > KS_LIMIT:
            raise TooLargeError(f"k*s = {self.k * self.s} exceeds the guard {KS_LIMIT}")
        if len(self.a) != 3 * self.k:
            raise InvalidInstance(f"length violation: expected {3 * self.k} integers, got {len(self.a)}")
        for i, x in enumerate(self.a):
            if not (4 * x > self.s and 2 * x < self.s):
                raise InvalidInstance(
                    f"bound violation at index {i}: a={x} not strictly between s/4 and s/2 (s={self.s})")
        total = sum(self.a)
        if total != self.k * self.s:
            raise InvalidInstance(f"sum violation: sum(a) = {total} != k*s = {self.k * self.s}")

    def to_json(self) -> dict:
        return {"k": self.k, "s": self.s, "a": list(self.a)}


@dataclass(frozen=True)
class TripleSolution:
    triples: tuple[tuple[int, int, int], ...]

    def assignment(self) -> tuple[int, ...]:
        """Map integer index -> triple index."""
        out = [-1] * (3 * len(self.triples))
        for t, triple in enumerate(self.triples):
            for i in triple:
                out[i] = t
        return tuple(out)


def validate(candidate: Mapping | ThreePartInstance) -> ThreePartInstance:
    """Return a validated instance; raises ``InvalidInstance`` naming the broken invariant."""
    if isinstance(candidate, ThreePartInstance):
        return ThreePartInstance(candidate.k, candidate.s, candidate.a)
    try:
        k, s, a = int(candidate["k"]), int(candidate["s"]), tuple(int(x) for x in candidate["a"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInstance(f"malformed instance: {exc}") from None
    return ThreePartInstance(k, s, a)


def check_solution(instance: ThreePartInstance, solution: TripleSolution) -> None:
    if len(solution.triples) != instance.k:
        raise InvalidInstance(f"expected {instance.k} triples, got {len(solution.triples)}")
    seen = sorted(i for t in solution.triples for i in t)
    if seen != list(range(3 * instance.k)):
        raise InvalidInstance("triples do not partition the index set")
    for t in solution.triples:
        if len(t) != 3 or sum(instance.a[i] for i in t) != instance.s:
            raise InvalidInstance(f"triple {t} does not sum to {instance.s}")


def solve_exact(instance: ThreePartInstance) -> TripleSolution | None:
    """Backtracking search; the smallest unassigned index anchors each triple.

    Partners are tried in increasing index order, so the first solution found
    is deterministic.
    """
    n = len(instance.a)
    if n > SOLVER_LIMIT:
        raise TooLargeError(f"instance too large for exact solver (3k = {n} > {SOLVER_LIMIT})")
    a, s = instance.a, instance.s
    full = (1 << n) - 1
    dead: set[int] = set()
    triples: list[tuple[int, int, int]] = []

    def search(used: int) -> bool:
        if used == full:
            return True
        if used in dead:
            return False
        i = next(b for b in range(n) if not used >> b & 1)
        rest = s - a[i]
        for j in range(i + 1, n):
            if used >> j & 1 or a[j] >= rest:
                continue
            for l in range(j + 1, n):
                if used >> l & 1 or a[j] + a[l] != rest:
                    continue
                triples.append((i, j, l))
                if search(used | 1 << i | 1 << j | 1 << l):
                    return True
                triples.pop()
        dead.add(used)
        return False

    if search(0):
        return TripleSolution(tuple(triples))
    return None


def _check_feasible(k: int, s: int) -> tuple[int, int]:
    if k < 1:
        raise InputError("k must be positive")
    lo, hi = value_range(s)
    if lo > hi or not (3 * lo <= s <= 3 * hi):
        raise InputError(f"infeasible (k={k}, s={s}): no triple of integers in ({s}/4, {s}/2) sums to {s}")
    if k * s > KS_LIMIT:
        raise TooLargeError(f"k*s = {k * s} exceeds the guard {KS_LIMIT}")
    return lo, hi


def _random_valid(k: int, s: int, lo: int, hi: int, rng: random.Random) -> list[int]:
    # start at the lower bound and hand out the remainder one unit at a time
    a = [lo] * (3 * k)
    room = list(range(3 * k))
    for _ in range(k * s - 3 * k * lo):
        slot = rng.randrange(len(room))
        a[room[slot]] += 1
        if a[room[slot]] == hi:
            room.pop(slot)
    return a


def _random_triple(s: int, lo: int, hi: int, rng: random.Random) -> list[int]:
    while True:
        x = rng.randint(lo, hi)
        y = rng.randint(lo, hi)
        z = s - x - y
        if lo <= z <= hi:
            return [x, y, z]


def generate(k: int, s: int, mode: Literal["yes", "no", "random"] = "random", seed: int = 0,
             max_tries: int = NO_RETRIES) -> ThreePartInstance:
    """Seeded instance generator.

    ``yes`` shuffles k random valid triples together, ``no`` rejection-samples
    random instances until the exact solver finds none (at most ``max_tries``
    draws), ``random`` returns any valid instance.
    """
    lo, hi = _check_feasible(k, s)
    rng = random.Random(seed)
    if mode == "yes":
        a = [x for _ in range(k) for x in _random_triple(s, lo, hi, rng)]
        rng.shuffle(a)
        return ThreePartInstance(k, s, tuple(a))
    if mode == "random":
        return ThreePartInstance(k, s, tuple(_random_valid(k, s, lo, hi, rng)))
    if mode == "no":
        if 3 * k > SOLVER_LIMIT:
            raise TooLargeError(f"instance too large for exact solver (3k = {3 * k} > {SOLVER_LIMIT})")
        for _ in range(max_tries):
            inst = ThreePartInstance(k, s, tuple(_random_valid(k, s, lo, hi, rng)))
            if solve_exact(inst) is None:
                return inst
        raise InputError(f"no NO-instance found for (k={k}, s={s}) after {max_tries} draws")
    raise InputError(f"unknown mode {mode!r}")

