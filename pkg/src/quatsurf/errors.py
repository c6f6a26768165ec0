"""Exception types shared across the package."""


class VerificationError(RuntimeError):
    """An internal certificate check failed; indicates a bug, not bad input."""


class CriterionOutOfScope(ValueError):
    """The symbolic ramification criterion does not apply to this prime.

    Raised for inert primes of the base quadratic field, for p = 2, for
    primes dividing the base discriminant, and for primes at which the
    element has positive even valuation.
    """


class BoundaryPrimeError(ValueError):
    """Prime is one of the finitely many excluded from the prime set by convention."""


class EmbeddingUndecidable(ValueError):
    """An embedding test hit a prime outside the symbolic criterion; extend search data."""


class SearchCapExceeded(RuntimeError):
    """A bounded search exhausted its safety cap without finding a candidate."""


class BoundsTooSmall(RuntimeError):
    """The search bounds admit no candidate field; enlarge them and retry."""
