"""Graph families, theorem runs and corpus sweeps with CSV/JSON reports."""

from __future__ import annotations

import csv
import io
import logging
import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Iterable, Sequence

from cartdom.graph import Graph, cartesian_product, has_isolated_vertex
from cartdom.machinery import MachineryError, double_count, prepare_instance
from cartdom.machinery.facts import Fact, eq
from cartdom.solvers import DominationError, domination_number

log = logging.getLogger(__name__)

FAMILIES = ("path", "cycle", "complete", "star", "random")
DEFAULT_CAPS = {1: 30, 2: 30, 3: 30, 4: 24, 5: 24}
CSV_FIELDS = ["theorem", "factors", "left", "right", "constant", "D_size", "slack", "pass", "claims_failed", "millis"]


@dataclass(frozen=True)
class FamilySpec:
    family: str
    order: int
    probability: float = 0.5
    seed: int = 0
    no_isolated: bool = True
    max_retries: int = 1000


def generate_family(spec: FamilySpec) -> Graph:
    n = spec.order
    if n < 1:
        raise ValueError("order must be at least 1")
    if spec.family == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")
    if spec.family == "cycle":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")
    if spec.family == "complete":
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")
    if spec.family == "star":
        return Graph.from_edges(n, [(0, i) for i in range(1, n)], f"S{n}")
    if spec.family != "random":
        raise ValueError(f"unknown family {spec.family!r}; expected one of {FAMILIES}")
    if not 0.0 <= spec.probability <= 1.0:
        raise ValueError("probability must lie in [0, 1]")
    rng = random.Random(spec.seed)
    name = f"R{n}p{spec.probability:g}s{spec.seed}"
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(spec.max_retries):
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < spec.probability], name)
        if not spec.no_isolated or not has_isolated_vertex(g):
            return g
    raise RuntimeError(f"no isolated-free graph after {spec.max_retries} draws for {name}")


def standard_corpus(max_order: int = 8, random_count: int = 200, random_max_order: int = 9, seed: int = 0) -> list[Graph]:
    """Paths, cycles, complete graphs and stars up to ``max_order`` plus seeded random graphs.

    Random graphs have order 3..``random_max_order`` and no isolated vertex.
    """
    graphs = []
    for n in range(1, max_order + 1):
        graphs.append(generate_family(FamilySpec("path", n)))
        if n >= 3:
            graphs.append(generate_family(FamilySpec("cycle", n)))
        graphs.append(generate_family(FamilySpec("complete", n)))
        graphs.append(generate_family(FamilySpec("star", n)))
    rng = random.Random(seed)
    for i in range(random_count):
        order = rng.randint(3, random_max_order)
        prob = rng.choice((0.3, 0.4, 0.5, 0.6, 0.7))
        graphs.append(generate_family(FamilySpec("random", order, prob, seed=seed * 100_003 + i)))
    return graphs


def distinct_isolated_free(graphs: Iterable[Graph]) -> list[Graph]:
    """Drop graphs with isolated vertices and exact (labelled) duplicates, keeping first names."""
    seen = set()
    out = []
    for g in graphs:
        if has_isolated_vertex(g) or g in seen:
            continue
        seen.add(g)
        out.append(g)
    return out


@dataclass(frozen=True)
class TheoremReport:
    theorem: int
    factors: tuple[str, ...]
    left: int
    right: int
    constant: int
    D_size: int
    passed: bool
    facts: tuple[Fact, ...] = ()
    millis: float = 0.0
    error: str = ""
    vizing: tuple[int, int] | None = None

    @property
    def slack(self) -> float:
        return self.left / self.right if self.right else float("inf")

    @property
    def claims_failed(self) -> int:
        return sum(not f.holds for f in self.facts) + bool(self.error)

    @property
    def factor_label(self) -> str:
        return "x".join(self.factors)

    @property
    def vizing_finding(self) -> bool:
        return self.vizing is not None and self.vizing[0] > self.vizing[1]

    def csv_row(self, timing: bool = False) -> list[str]:
        return [
            str(self.theorem),
            self.factor_label,
            str(self.left),
            str(self.right),
            str(self.constant),
            str(self.D_size),
            f"{self.slack:.6f}",
            "true" if self.passed else "false",
            str(self.claims_failed),
            f"{self.millis:.1f}" if timing else "",
        ]

    def as_dict(self, timing: bool = True) -> dict:
        d = dict(zip(CSV_FIELDS, self.csv_row(timing)))
        d.update(
            theorem=self.theorem,
            left=self.left,
            right=self.right,
            constant=self.constant,
            D_size=self.D_size,
            slack=round(self.slack, 6),
            claims_failed=self.claims_failed,
            millis=round(self.millis, 1) if timing else None,
            claims=[f.as_dict() for f in self.facts],
        )
        d["pass"] = self.passed
        if self.error:
            d["error"] = self.error
        if self.vizing is not None:
            d["vizing"] = {"gamma_product_of_factors": self.vizing[0], "gamma_of_product": self.vizing[1]}
        return d

    def summary_line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"theorem {self.theorem} on {self.factor_label}: {verdict}  "
            f"left={self.left} right={self.right} (constant {self.constant}, |D|={self.D_size}, "
            f"slack {self.slack:.3f}, {self.claims_failed} failed checks)"
        )


def _prefixed(facts, prefix: str) -> list[Fact]:
    return [Fact(f"{prefix}{f.name}", f.holds, f.lhs, f.rhs, f.relation) for f in facts]


def _check_arity(theorem: int, factors: Sequence[Graph]) -> None:
    if theorem not in DEFAULT_CAPS:
        raise ValueError(f"theorem must be one of 1..5, got {theorem}")
    if theorem in (1, 2, 4) and len(factors) != 2:
        raise ValueError(f"theorem {theorem} takes exactly two factors")
    if len(factors) < 2:
        raise ValueError(f"theorem {theorem} takes at least two factors")
    for f in factors:
        if has_isolated_vertex(f):
            raise DominationError(f"factor {f.name or f} has an isolated vertex")


def run_theorem(theorem: int, factors: Sequence[Graph], backend: str | None = None, vizing: bool = False) -> TheoremReport:
    """Solve every number involved, build the machinery and check the full ledger."""
    factors = tuple(factors)
    _check_arity(theorem, factors)
    names = tuple(f.name or f"G{f.order}" for f in factors)
    start = time.perf_counter()
    if theorem == 1:
        first = double_count(prepare_instance(1, factors, backend=backend))
        second = double_count(prepare_instance(1, factors[::-1], backend=backend))
        facts = _prefixed(first.facts, "total on first/") + _prefixed(second.facts, "total on second/")
        facts.append(eq("both orientations agree on |D|", first.D_size, second.D_size))
        left = max(first.left, second.left)
        right, constant, size = first.right, first.constant, first.D_size
    else:
        dc = double_count(prepare_instance(theorem, factors, backend=backend))
        facts = list(dc.facts)
        left, right, constant, size = dc.left, dc.right, dc.constant, dc.D_size
    viz = None
    if vizing and len(factors) == 2:
        g, h = factors
        viz = (
            domination_number(g, backend=backend).number * domination_number(h, backend=backend).number,
            domination_number(cartesian_product(factors).graph, backend=backend).number,
        )
    millis = (time.perf_counter() - start) * 1000
    passed = left <= right and all(f.holds for f in facts)
    return TheoremReport(theorem, names, left, right, constant, size, passed, tuple(facts), millis, vizing=viz)


def _run_safely(args) -> TheoremReport:
    theorem, factors, backend, vizing = args
    try:
        return run_theorem(theorem, factors, backend, vizing)
    except (MachineryError, DominationError, AssertionError) as exc:
        names = tuple(f.name or f"G{f.order}" for f in factors)
        log.warning("theorem %d on %s raised %s", theorem, "x".join(names), exc)
        return TheoremReport(theorem, names, 0, 0, 0, 0, False, error=f"{type(exc).__name__}: {exc}")


def instances(
    theorem: int,
    graphs: Sequence[Graph],
    max_order: int | None = None,
    arity: int | None = None,
    ordered: bool = False,
) -> list[tuple[Graph, ...]]:
    """Factor tuples (repeats allowed) whose product stays within ``max_order``.

    Unordered by default; ``ordered`` yields every arrangement, which matters
    because the per-axis constructions are not symmetric in the factors.
    """
    if arity is None:
        arity = 3 if theorem in (3, 5) else 2
    if theorem in (1, 2, 4) and arity != 2:
        raise ValueError(f"theorem {theorem} takes exactly two factors")
    cap = DEFAULT_CAPS[theorem] if max_order is None else max_order
    pool = distinct_isolated_free(graphs)
    out = []
    tuples = product(pool, repeat=arity) if ordered else combinations_with_replacement(pool, arity)
    for combo in tuples:
        size = 1
        for g in combo:
            size *= g.order
        if size <= cap:
            out.append(combo)
    return out


@dataclass
class SweepResult:
    reports: list[TheoremReport] = field(default_factory=list)

    @property
    def failures(self) -> list[TheoremReport]:
        return [r for r in self.reports if not r.passed]

    @property
    def all_passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        slacks = [r.slack for r in self.reports if r.right]
        return {
            "instances": len(self.reports),
            "passed": sum(r.passed for r in self.reports),
            "failed": len(self.failures),
            "min_slack": min(slacks) if slacks else None,
            "mean_slack": statistics.fmean(slacks) if slacks else None,
            "max_slack": max(slacks) if slacks else None,
            "failures": [f"theorem {r.theorem} on {r.factor_label}" for r in self.failures],
            "vizing_findings": [r.factor_label for r in self.reports if r.vizing_finding],
        }


def sweep(
    theorem: int,
    graphs: Sequence[Graph],
    max_order: int | None = None,
    jobs: int = 1,
    arity: int | None = None,
    backend: str | None = None,
    vizing: bool = False,
    ordered: bool = False,
) -> SweepResult:
    """Run one theorem over every admissible factor tuple; output order follows :func:`instances`."""
    todo = [(theorem, combo, backend, vizing) for combo in instances(theorem, graphs, max_order, arity, ordered)]
    if jobs <= 1 or len(todo) < 2:
        reports = [_run_safely(t) for t in todo]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_safely, todo, chunksize=max(1, len(todo) // (8 * jobs))))
    return SweepResult(reports)


def write_csv(reports: Iterable[TheoremReport], fh=None, timing: bool = False) -> str:
    """Write the sweep table; ``millis`` stays empty unless ``timing`` is set."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in reports:
        writer.writerow(r.csv_row(timing))
    text = buf.getvalue()
    if fh is not None:
        fh.write(text)
    return text
