"""Synthesis-axiom checking and the randomized audit harness.

Four axioms constrain how a rational aggregation of attribute assessments
may behave:

independence
    A grade assessed by no attribute must receive no combined belief.
consensus
    If every attribute is precisely assessed to one shared grade, the
    combined assessment must be precisely that grade.
completeness
    If every assessment is complete and confined to a subset of grades,
    the combined assessment must be complete on that subset.
incompleteness
    If any assessment is incomplete, the combined assessment must be
    incomplete as well.

Whether an aggregator "should" satisfy them depends on how its weights are
interpreted; the audit harness simply measures what holds.  Instances are
generated constructively from each axiom's hypothesis (hypothesis sets
have measure zero under uniform sampling, so rejection sampling would
never terminate).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .algorithms import (
    AGGREGATORS,
    Assessment,
    CombinedAssessment,
    WeightedAssessment,
)
from .dst import GradeFrame
from .errors import AxiomInapplicableError

AXIOMS = ("independence", "consensus", "completeness", "incompleteness")

#: Combined degrees are compared against axiom conclusions at this tolerance.
AXIOM_TOL = 1e-9


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of checking one axiom on one instance."""

    axiom: str
    holds: bool
    detail: str


def _resolve(aggregator: str | Callable) -> Callable:
    if callable(aggregator):
        return aggregator
    try:
        return AGGREGATORS[aggregator]
    except KeyError:
        raise ValueError(
            f"unknown aggregator {aggregator!r}; expected one of {sorted(AGGREGATORS)}"
        ) from None


def _certain_grade(a: Assessment) -> int | None:
    """Index of the single grade assessed with degree 1, if any."""
    hot = [i for i, d in enumerate(a.degrees) if d > AXIOM_TOL]
    if len(hot) == 1 and abs(a.degrees[hot[0]] - 1.0) <= AXIOM_TOL:
        return hot[0]
    return None


def check_axiom(
    axiom: str,
    aggregator: str | Callable,
    items: Sequence[WeightedAssessment],
) -> AxiomVerdict:
    """Check one synthesis axiom for an aggregator on a concrete instance.

    The instance must satisfy the axiom's hypothesis; otherwise
    :class:`~erkit.errors.AxiomInapplicableError` is raised, which is a
    different outcome than a violation verdict.
    """
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}; expected one of {AXIOMS}")
    if not items:
        raise ValueError("an axiom instance needs at least one assessment")
    fn = _resolve(aggregator)
    frame = items[0].assessment.frame

    if axiom == "independence":
        untouched = [
            n
            for n in range(frame.size)
            if all(item.assessment.degrees[n] == 0.0 for item in items)
        ]
        if not untouched:
            raise AxiomInapplicableError("every grade is assessed by some attribute")
        combined: CombinedAssessment = fn(items)
        worst = max(untouched, key=lambda n: combined.assigned[n])
        value = combined.assigned[worst]
        return AxiomVerdict(
            axiom,
            value <= AXIOM_TOL,
            f"unassessed grade {frame.grades[worst]!r} received degree {value!r}",
        )

    if axiom == "consensus":
        shared = _certain_grade(items[0].assessment)
        if shared is None or any(
            _certain_grade(item.assessment) != shared for item in items
        ):
            raise AxiomInapplicableError(
                "instances must assess precisely one shared grade with degree 1"
            )
        combined = fn(items)
        value = combined.assigned[shared]
        return AxiomVerdict(
            axiom,
            abs(value - 1.0) <= AXIOM_TOL,
            f"shared grade {frame.grades[shared]!r} received degree {value!r}",
        )

    if axiom == "completeness":
        if any(not item.assessment.is_complete for item in items):
            raise AxiomInapplicableError("every assessment must be complete")
        support = 0
        for item in items:
            support |= frame.subset_mask(
                g for g, d in item.assessment.belief_degrees.items() if d > 0.0
            )
        combined = fn(items)
        inside = math.fsum(
            combined.assigned[n] for n in range(frame.size) if support >> n & 1
        )
        labels = frame.mask_labels(support)
        return AxiomVerdict(
            axiom,
            abs(inside - 1.0) <= AXIOM_TOL,
            f"combined degree on {labels} is {inside!r}",
        )

    # incompleteness
    if all(item.assessment.is_complete for item in items):
        raise AxiomInapplicableError("at least one assessment must be incomplete")
    combined = fn(items)
    return AxiomVerdict(
        axiom,
        combined.unassigned > AXIOM_TOL,
        f"combined unassigned degree is {combined.unassigned!r}",
    )


def _random_incomplete_degrees(rng: np.random.Generator, n: int) -> list[float]:
    raw = rng.dirichlet(np.ones(n))
    return [float(v) for v in raw * rng.uniform(0.3, 0.9)]


def _random_weights(rng: np.random.Generator, count: int, normalized: bool) -> list[float]:
    if normalized:
        raw = rng.dirichlet(np.ones(count) * 3.0)
        return [float(w) for w in raw]
    return [float(w) for w in rng.uniform(0.2, 1.0, size=count)]


def generate_axiom_instance(
    axiom: str,
    rng: np.random.Generator,
    n_grades: int = 5,
    n_items: int = 3,
    normalized_weights: bool = False,
) -> list[WeightedAssessment]:
    """Construct a random instance satisfying one axiom's hypothesis.

    ``normalized_weights`` must be set for aggregators that require the
    weights to form a convex combination.  In the free-weight mode,
    incompleteness instances occasionally pin a complete assessment to
    weight one, which is the only regime in which the reliability-style
    scheme can wipe out incompleteness entirely.
    """
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}; expected one of {AXIOMS}")
    frame = GradeFrame(f"g{i}" for i in range(n_grades))
    weights = _random_weights(rng, n_items, normalized_weights)
    importances = _random_weights(rng, n_items, normalized=True)
    reliabilities = [float(r) for r in rng.uniform(0.2, 1.0, size=n_items)]

    def pack(assessments: list[Assessment]) -> list[WeightedAssessment]:
        return [
            WeightedAssessment(a, weight=w, reliability=r, importance=b)
            for a, w, r, b in zip(assessments, weights, reliabilities, importances)
        ]

    if axiom == "independence":
        n_excluded = int(rng.integers(1, n_grades))
        excluded = set(rng.choice(n_grades, size=n_excluded, replace=False).tolist())
        allowed = [n for n in range(n_grades) if n not in excluded]
        assessments = []
        for _ in range(n_items):
            degrees = [0.0] * n_grades
            raw = _random_incomplete_degrees(rng, len(allowed))
            for n, d in zip(allowed, raw):
                degrees[n] = d
            assessments.append(Assessment(frame, tuple(degrees)))
        return pack(assessments)

    if axiom == "consensus":
        shared = int(rng.integers(n_grades))
        degrees = tuple(1.0 if n == shared else 0.0 for n in range(n_grades))
        return pack([Assessment(frame, degrees)] * n_items)

    if axiom == "completeness":
        n_subset = int(rng.integers(1, n_grades))
        subset = sorted(rng.choice(n_grades, size=n_subset, replace=False).tolist())
        assessments = []
        for _ in range(n_items):
            raw = rng.dirichlet(np.ones(len(subset)))
            degrees = [0.0] * n_grades
            for n, d in zip(subset, raw):
                degrees[n] = float(d)
            # force an exactly complete assessment despite float round-off
            degrees[subset[-1]] += 1.0 - math.fsum(degrees)
            assessments.append(Assessment(frame, tuple(degrees)))
        return pack(assessments)

    # incompleteness
    assessments = []
    for i in range(n_items):
        if i == 0 or rng.random() < 0.5:
            raw = _random_incomplete_degrees(rng, n_grades)
            assessments.append(Assessment(frame, tuple(raw)))
        else:
            raw = rng.dirichlet(np.ones(n_grades))
            degrees = [float(d) for d in raw]
            degrees[-1] += 1.0 - math.fsum(degrees)
            assessments.append(Assessment(frame, tuple(degrees)))
    items = pack(assessments)
    if not normalized_weights and rng.random() < 0.5:
        # pin one complete assessment to full weight
        complete = [i for i, a in enumerate(assessments) if a.is_complete]
        if complete:
            i = int(rng.choice(complete))
            items[i] = WeightedAssessment(
                assessments[i],
                weight=1.0,
                reliability=items[i].reliability,
                importance=items[i].importance,
            )
    return items


@dataclass
class AxiomAuditEntry:
    """Aggregate outcome of auditing one axiom."""

    axiom: str
    runs: int = 0
    holds: int = 0
    violations: int = 0
    first_counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.violations == 0


def _serialize_instance(items: Sequence[WeightedAssessment]) -> list[dict]:
    return [
        {
            "degrees": item.assessment.belief_degrees,
            "weight": item.weight,
            "reliability": item.reliability,
            "importance": item.importance,
        }
        for item in items
    ]


def audit_axioms(
    algorithm: str,
    iterations: int = 1000,
    seed: int = 42,
    max_grades: int = 5,
    max_items: int = 6,
) -> dict[str, AxiomAuditEntry]:
    """Run the constructive axiom audit for one aggregation algorithm.

    Deterministic for a fixed seed.  Returns one entry per axiom with
    hold/violation counts and the first counterexample found, serialized
    for reporting.
    """
    if iterations < 1:
        raise ValueError("the audit needs at least one iteration")
    _resolve(algorithm)
    normalized = algorithm in ("mer", "e2r")
    rng = np.random.default_rng(seed)
    report: dict[str, AxiomAuditEntry] = {}
    for axiom in AXIOMS:
        entry = AxiomAuditEntry(axiom)
        for _ in range(iterations):
            n_grades = int(rng.integers(2, max_grades + 1))
            n_items = int(rng.integers(2, max_items + 1))
            items = generate_axiom_instance(
                axiom, rng, n_grades, n_items, normalized_weights=normalized
            )
            verdict = check_axiom(axiom, algorithm, items)
            entry.runs += 1
            if verdict.holds:
                entry.holds += 1
            else:
                entry.violations += 1
                if entry.first_counterexample is None:
                    entry.first_counterexample = {
                        "instance": _serialize_instance(items),
                        "detail": verdict.detail,
                    }
        report[axiom] = entry
    return report
