"""Exception types shared across the toolkit."""


class ErkitError(Exception):
    """Base class for all toolkit-specific errors."""


class FrameMismatchError(ErkitError):
    """Two objects defined over different frames of discernment were mixed."""


class CompleteConflictError(ErkitError):
    """Dempster-style combination met totally conflicting evidence.

    Raised when the normalization denominator of the orthogonal sum drops
    to (or below) the conflict tolerance, leaving no mass to renormalize.
    """


class DegenerateMassError(ErkitError):
    """An operation met a mass function it cannot meaningfully transform.

    Typical case: normalizing an importance-discounted mass function whose
    entire mass sits on the indecisiveness element.
    """


class WeightSumError(ErkitError):
    """Importance weights violate the required normalization constraint."""


class AxiomInapplicableError(ErkitError):
    """An axiom check was requested on an instance outside its hypothesis.

    Distinct from an axiom *violation*: the instance simply does not meet
    the precondition under which the axiom says anything.
    """


class ModelFormatError(ErkitError):
    """A model or result document could not be parsed against the schema."""


class ModelValidationError(ErkitError):
    """A structurally parseable model failed semantic validation.

    Carries the full diagnostic list so callers can report every problem
    at once instead of one per run.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        lines = "; ".join(str(d) for d in self.diagnostics)
        super().__init__(f"model validation failed: {lines}")
