"""Decision layer: redistribute unassigned belief, score, and rank."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Mapping

from .algorithms import CombinedAssessment, DEGREE_SUM_TOL
from .dst import GradeFrame
from .errors import FrameMismatchError


@dataclass(frozen=True)
class UtilityFunction:
    """Per-grade utilities in [0, 1], ordered like the frame's grades.

    Utilities are expected to be non-decreasing along the grade order;
    a violation is reported as a warning rather than an error since the
    expected-utility formula itself does not require monotonicity.
    """

    frame: GradeFrame
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != self.frame.size:
            raise ValueError("one utility per grade is required")
        for v in self.values:
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"utility {v!r} outside [0, 1]")
        if any(b < a for a, b in zip(self.values, self.values[1:])):
            warnings.warn(
                "utilities are not non-decreasing along the grade order",
                stacklevel=2,
            )

    @classmethod
    def from_mapping(cls, frame: GradeFrame, utilities: Mapping[str, float]) -> "UtilityFunction":
        missing = [g for g in frame.grades if g not in utilities]
        if missing:
            raise ValueError(f"utilities missing for grades {missing}")
        return cls(frame, tuple(utilities[g] for g in frame.grades))

    @classmethod
    def evenly_spaced(cls, frame: GradeFrame) -> "UtilityFunction":
        """Default ladder: n/N for the n-th grade, ending at 1."""
        n = frame.size
        return cls(frame, tuple((i + 1) / n for i in range(n)))

    def of(self, grade: str) -> float:
        return self.values[self.frame.index(grade)]

    @property
    def by_grade(self) -> dict[str, float]:
        return dict(zip(self.frame.grades, self.values))


def redistribute_unknown(combined: CombinedAssessment) -> dict[str, float]:
    """Split the unassigned degree evenly across all grades.

    This is the singleton pignistic redistribution of the global-ignorance
    mass; it preserves the argmax among the assigned degrees.
    """
    share = combined.unassigned / combined.frame.size
    return {g: d + share for g, d in combined.assigned_degrees.items()}


def expected_utility(degrees: Mapping[str, float], utility: UtilityFunction) -> float:
    """Inner product of redistributed degrees with the grade utilities."""
    total = math.fsum(degrees.values())
    if abs(total - 1.0) > DEGREE_SUM_TOL:
        raise ValueError(f"degrees sum to {total!r}, expected 1")
    try:
        return math.fsum(d * utility.of(g) for g, d in degrees.items())
    except FrameMismatchError:
        raise ValueError("degrees mention a grade missing from the utility function") from None


def rank(utilities: Mapping[str, float]) -> list[str]:
    """Alternatives by descending utility; ties keep declaration order."""
    if not utilities:
        raise ValueError("cannot rank an empty set of alternatives")
    return sorted(utilities, key=lambda alt: -utilities[alt])


@dataclass(frozen=True)
class RankedResult:
    """Decision summary: redistributed degrees, utilities, and the ranking."""

    degrees: dict[str, dict[str, float]]
    utilities: dict[str, float]
    ranking: tuple[str, ...]


def decide(
    combined: Mapping[str, CombinedAssessment], utility: UtilityFunction
) -> RankedResult:
    """Score and rank a set of per-alternative combined assessments."""
    degrees = {alt: redistribute_unknown(c) for alt, c in combined.items()}
    utilities = {alt: expected_utility(d, utility) for alt, d in degrees.items()}
    return RankedResult(degrees, utilities, tuple(rank(utilities)))
