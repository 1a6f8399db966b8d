"""Flat aggregation: one general attribute, three weighted judgments.

Assesses the brakes of a motorcycle from three basic attributes and shows
how the three aggregation schemes treat the attribute factors differently:
as reliabilities (oer), as normalized importances (mer), or as both (e2r).
"""

from erkit import (
    Assessment,
    GradeFrame,
    WeightedAssessment,
    e2r_aggregate,
    mer_aggregate,
    oer_aggregate,
)

frame = GradeFrame(["poor", "indifferent", "average", "good", "excellent"])

# Expert judgments for the three basic attributes of "brakes":
stopping_power = Assessment.from_degrees(frame, {"excellent": 1.0})
braking_stability = Assessment.from_degrees(frame, {"average": 0.4, "good": 0.6})
feel_at_control = Assessment.from_degrees(frame, {"good": 0.5, "excellent": 0.3})

print("stopping power   :", stopping_power.belief_degrees)
print("braking stability:", braking_stability.belief_degrees)
print("feel at control  :", feel_at_control.belief_degrees,
      f"(incomplete, {feel_at_control.unassigned:.1f} unassigned)")


def show(label, combined):
    degrees = {g: round(d, 4) for g, d in combined.assigned_degrees.items() if d > 1e-12}
    print(f"{label:28s} {degrees}  unknown={combined.unassigned:.4f}")


# Interpreting the weights as source reliabilities: unreliable sources
# surrender mass to ignorance, so the result is never fully committed.
items = [
    WeightedAssessment(stopping_power, weight=0.9),
    WeightedAssessment(braking_stability, weight=0.7),
    WeightedAssessment(feel_at_control, weight=0.2),
]
print()
show("weights as reliability", oer_aggregate(items))

# Interpreting normalized weights as relative importances: a unanimous
# verdict stays unanimous no matter how small a weight is.
items = [
    WeightedAssessment(stopping_power, weight=0.4),
    WeightedAssessment(braking_stability, weight=0.3),
    WeightedAssessment(feel_at_control, weight=0.3),
]
show("weights as importance", mer_aggregate(items))

# Carrying both factors at once.
items = [
    WeightedAssessment(stopping_power, reliability=0.9, importance=0.4),
    WeightedAssessment(braking_stability, reliability=0.7, importance=0.3),
    WeightedAssessment(feel_at_control, reliability=0.2, importance=0.3),
]
show("reliability + importance", e2r_aggregate(items))

# The two-factor scheme contains the other two as limiting cases.
full_importance = [
    WeightedAssessment(i.assessment, reliability=i.reliability, importance=1.0)
    for i in items
]
show("e2r with importance 1", e2r_aggregate(full_importance))
as_reliability = [
    WeightedAssessment(i.assessment, weight=i.reliability) for i in items
]
show("  = oer on reliabilities", oer_aggregate(as_reliability))

# Step-by-step trace of the recursion, on request.
combined, trace = e2r_aggregate(items, with_trace=True)
print("\nper-step masses (singletons summed, frame, omega, K):")
for i, step in enumerate(trace.steps, start=1):
    print(f"  after item {i}: {sum(step.singletons):.4f} {step.frame_mass:.4f} "
          f"{step.omega_mass:.4f} K={step.normalizer:.4f}")
