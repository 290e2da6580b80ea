"""JSON interchange formats for instances, bundles, partitions and solutions.

All files are UTF-8 JSON with sorted keys. Rationals are stored as
``[numerator, denominator]`` pairs; alpha is never stored because it is
recomputable from (family, k, s, c, d, n).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .core import GeneralGraph, GridGraph, InputError, Partition, TreeGraph, as_fraction
from .numeric import as_pair
from .reductions import (FAMILIES, GRID_FAMILIES, ReductionBundle, ReductionParams, alpha_for,
                         epsilon_for)
from .tpart import ThreePartInstance, TripleSolution, validate


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def write(path, obj) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def read(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None


def instance_to_json(instance: ThreePartInstance) -> dict:
    return {"k": instance.k, "s": instance.s, "a": list(instance.a)}


def instance_from_json(data) -> ThreePartInstance:
    return validate(data)


def solution_to_json(solution: TripleSolution | None) -> dict:
    return {"triples": None if solution is None else [list(t) for t in solution.triples]}


def solution_from_json(data) -> TripleSolution | None:
    triples = data.get("triples") if isinstance(data, dict) else None
    if triples is None:
        return None
    return TripleSolution(tuple(tuple(int(i) for i in t) for t in triples))


def partition_to_json(partition: Partition) -> dict:
    return {"k": partition.k, "colors": list(partition.colour)}


def partition_from_json(data) -> Partition:
    try:
        return Partition(int(data["k"]), tuple(data["colors"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed partition: {exc}") from None


def bundle_to_json(bundle: ReductionBundle) -> dict:
    pr = bundle.params
    params = {
        "k": pr.k, "s": pr.s, "c": as_pair(pr.c), "d": as_pair(pr.d),
        "epsilon": as_pair(pr.epsilon), "p": pr.p, "m": pr.m, "n": pr.n,
    }
    out = {
        "family": pr.family,
        "params": params,
        "edges": [list(e) for e in bundle.graph.edges],
        "gadget_of": list(bundle.gadget_of),
        "connectors": [list(e) for e in bundle.connector_edges],
    }
    if pr.family in GRID_FAMILIES:
        params["h"] = pr.h
        out["vertices"] = [list(c) for c in bundle.graph.coords]
    return out


def bundle_from_json(data) -> ReductionBundle:
    try:
        family = data["family"]
        raw = data["params"]
        k, s, p, m, n = (int(raw[key]) for key in ("k", "s", "p", "m", "n"))
        c, d, eps = as_fraction(raw["c"]), as_fraction(raw["d"]), as_fraction(raw["epsilon"])
        edges = [tuple(e) for e in data["edges"]]
        gadget_of = tuple(int(g) for g in data["gadget_of"])
        connectors = tuple((int(i), int(j)) for i, j in data["connectors"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed bundle: {exc}") from None
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}")
    if eps != epsilon_for(family, k, s):
        raise InputError(f"epsilon {eps} does not match family {family}")
    h = None
    if family in GRID_FAMILIES:
        h = int(raw["h"])
        graph = GridGraph(tuple(tuple(v) for v in data["vertices"]), tuple(edges))
    elif family == "tree":
        graph = TreeGraph.from_edges(n, edges, root=0)
    else:
        graph = GeneralGraph(n, tuple(edges))
    if graph.n != n or len(gadget_of) != n:
        raise InputError(f"bundle declares n={n} but stores {graph.n} vertices / {len(gadget_of)} gadget labels")
    params = ReductionParams(family=family, k=k, s=s, c=c, d=d, epsilon=eps,
                             alpha=alpha_for(family, k, s, c, d, n), p=p, m=m, n=n, h=h)
    sizes = [0] * (3 * k)
    for g in gadget_of:
        if not 0 <= g < 3 * k:
            raise InputError(f"gadget index {g} out of range")
        sizes[g] += 1
    if any(size % p for size in sizes):
        raise InputError("gadget sizes are not multiples of p")
    source = ThreePartInstance(k, s, tuple(size // p for size in sizes))
    return ReductionBundle(params, graph, gadget_of, connectors, source)


def report_to_json(outcome) -> dict:
    r = outcome.report
    diag = {}
    for key, value in outcome.diagnostics.items():
        diag[key] = as_pair(value) if isinstance(value, Fraction) else value
    return {
        "cut_size": r.cut_size,
        "part_sizes": list(r.part_sizes),
        "max_part": r.max_part,
        "minority_total": r.minority_total,
        "majority_colour": list(r.majority_colour),
        "balanced": outcome.balanced,
        "cut_within_alpha_m": outcome.cut_within_alpha_m,
        "minority_ok": outcome.minority_ok,
        "reduction_condition_ok": outcome.reduction_condition_ok,
        "certificates": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                         for c in outcome.certificates],
        "diagnostics": diag,
    }
