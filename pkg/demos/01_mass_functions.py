"""Belief-function primitives: masses, discounting, combination, decisions.

Walks through the core vocabulary on a five-grade quality scale: building
mass functions from judgments, discounting them for source reliability and
importance, combining them, and reading decision quantities back out.
"""

from erkit import (
    GeneralMassFunction,
    GradeFrame,
    MassFunction,
    belief,
    dempster_combine,
    extended_dempster_combine,
    importance_discount,
    normalize_ibba,
    pignistic,
    plausibility,
    reliability_discount,
    reliability_importance_discount,
)

frame = GradeFrame(["poor", "indifferent", "average", "good", "excellent"])

# A judgment "good with confidence 0.5, excellent with confidence 0.3" is
# incomplete: the missing 0.2 stays on the whole frame as ignorance.
judgment = MassFunction.from_masses(frame, {"good": 0.5, "excellent": 0.3})
print("judgment:", judgment.singleton_masses, "ignorance:", judgment.frame_mass)

# Belief and plausibility bracket the support for any grade subset.
general = judgment.to_general()
subset = ["good", "excellent"]
print(f"belief{subset} = {belief(general, subset):.2f}")
print(f"plausibility{subset} = {plausibility(general, subset):.2f}")

# The pignistic transform spreads ignorance evenly for decision making.
print("pignistic:", {g: round(p, 3) for g, p in pignistic(general).items()})

# A source that is only 20% reliable keeps 20% of its say; the rest of its
# mass is surrendered to ignorance.
unreliable = reliability_discount(judgment, 0.2)
print("\nreliability 0.2:", unreliable.singleton_masses, "ignorance:", unreliable.frame_mass)

# Importance discounting instead withholds mass on a dedicated
# indecisiveness element, to be folded back after combination.
minor = importance_discount(judgment, 0.3)
print("importance 0.3:", minor.singleton_masses, "omega:", minor.omega_mass)

# Both at once, in a single closed form.
both = reliability_importance_discount(judgment, 0.2, 0.3)
print("both factors:", both.singleton_masses, "ignorance:", both.frame_mass, "omega:", both.omega_mass)

# Dempster's rule fuses independent sources; agreement sharpens belief.
second = MassFunction.from_masses(frame, {"good": 0.6, "average": 0.2})
fused = dempster_combine(judgment, second)
print("\nfused:", {g: round(m, 3) for g, m in fused.singleton_masses.items()})

# The extended rule fuses importance-discounted sources, and normalization
# folds the withheld omega mass back in.
fused_minor = extended_dempster_combine(
    importance_discount(judgment, 0.6), importance_discount(second, 0.4)
)
print("extended:", {g: round(m, 3) for g, m in fused_minor.singleton_masses.items()},
      "omega:", round(fused_minor.omega_mass, 3))
normalized = normalize_ibba(fused_minor)
print("normalized:", {g: round(m, 3) for g, m in normalized.singleton_masses.items()})

# The general power-set form handles arbitrary focal sets (here used as a
# cross-check oracle for the specialized fast paths).
arbitrary = GeneralMassFunction.from_subsets(
    frame, {("good", "excellent"): 0.7, ("average",): 0.1, frame.grades: 0.2}
)
print("\narbitrary focal sets, pignistic:",
      {g: round(p, 3) for g, p in pignistic(arbitrary).items()})
