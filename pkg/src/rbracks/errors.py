"""Exception types shared across the package."""


class TableError(ValueError):
    """A Cayley table is malformed (not square, entry out of range)."""


class AxiomError(ValueError):
    """A structure fails an axiom it was required to satisfy.

    ``axiom`` names the failing law and ``witness`` holds the offending
    elements, so callers can report exactly where the check broke.
    """

    def __init__(self, axiom, witness, message=None):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or f"{axiom} fails at {witness}")


class PhiError(AxiomError):
    """An action assignment is not a valid homomorphism into automorphisms."""


class PreconditionError(ValueError):
    """An operation was called on inputs outside its stated domain."""


class CapExceeded(RuntimeError):
    """An exhaustive search would exceed the configured budget."""

    def __init__(self, what, required, cap):
        self.required = required
        self.cap = cap
        super().__init__(f"{what} needs {required} candidates; cap is {cap}")


class ClaimFalsified(AssertionError):
    """A theorem cross-check failed on a concrete input."""

    def __init__(self, claim, witness=None):
        self.claim = claim
        self.witness = witness
        super().__init__(f"{claim} falsified" + (f" at {witness}" if witness is not None else ""))
