"""Auditing the synthesis axioms against each aggregation scheme.

Generates hypothesis-satisfying instances constructively and measures
which axioms each scheme satisfies.  The importance-interpreted scheme
satisfies all four; the reliability-interpreted scheme satisfies only
independence, which is the expected behavior, not a bug: a unanimous
verdict from unreliable witnesses should not be fully believed.
"""

import numpy as np

from erkit import (
    Assessment,
    GradeFrame,
    WeightedAssessment,
    audit_axioms,
    check_axiom,
    generate_axiom_instance,
)

frame = GradeFrame(["poor", "indifferent", "average", "good", "excellent"])

# A single concrete consensus instance: both attributes say "excellent",
# with partial weights.
unanimous = [
    WeightedAssessment(Assessment.from_degrees(frame, {"excellent": 1.0}), weight=0.4),
    WeightedAssessment(Assessment.from_degrees(frame, {"excellent": 1.0}), weight=0.6),
]
for algo in ("mer", "oer"):
    verdict = check_axiom("consensus", algo, unanimous)
    print(f"consensus under {algo}: {'holds' if verdict.holds else 'violated'} ({verdict.detail})")

# Random constructive instances, one per axiom.
rng = np.random.default_rng(0)
for axiom in ("independence", "consensus", "completeness", "incompleteness"):
    items = generate_axiom_instance(axiom, rng, n_grades=4, n_items=3, normalized_weights=True)
    verdict = check_axiom(axiom, "mer", items)
    print(f"{axiom:15s} random instance under mer: {'holds' if verdict.holds else 'violated'}")

# The full audit: 500 instances per axiom, deterministic under the seed.
for algo in ("oer", "mer", "e2r"):
    print(f"\naudit of {algo} (500 instances per axiom, seed 42):")
    for axiom, entry in audit_axioms(algo, iterations=500, seed=42).items():
        print(f"  {axiom:15s} holds {entry.holds}/{entry.runs}")
        if entry.first_counterexample is not None:
            print(f"    e.g. {entry.first_counterexample['detail']}")
