"""Exception types shared across the toolkit."""


class BudgetExceededError(RuntimeError):
    """An enumeration or backtracking budget ran out before the computation finished.

    Raised deterministically: the same inputs with the same budget always fail
    at the same point.  Distinct from mathematical failures so that callers
    (and the CLI) can tell "too expensive" apart from "wrong".
    """


class ShapeMismatchError(ValueError):
    """A list assignment does not line up with the target graph's vertex set."""


class UnsupportedFamilyError(ValueError):
    """No closed-form chromatic polynomial is implemented for this family."""


class StructureError(ValueError):
    """An assignment lacks the expected two-by-l structure.

    The message names the first offending vertex.
    """


class CertificationError(RuntimeError):
    """An internal consistency check failed while building a certificate."""
