"""Exception types raised across the package."""


class MultalgError(Exception):
    """Base class for all errors raised by multalg."""


class DimensionMismatch(MultalgError, ValueError):
    pass


class NoSolution(MultalgError):
    """A linear system has no solution."""


class ValidationError(MultalgError, ValueError):
    """An input object violates one of its structural invariants."""


class DegenerateProduct(MultalgError):
    """The algebra's multiplication is degenerate; M(A) is not available."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoInvolution(MultalgError):
    pass


class NotAnIdeal(MultalgError):
    pass


class NoUnit(MultalgError):
    pass


class NondegeneracyConditionFails(MultalgError):
    """AB != B or BA != B for a subalgebra A of a unital algebra B."""


class FirmnessConditionFails(MultalgError):
    pass


class NondegeneracyFails(MultalgError):
    """A homomorphism into M(B) is not non-degenerate."""


class PreconditionViolated(MultalgError):
    pass


class NoLocalUnits(MultalgError):
    pass


class BimoduleAxiomFails(MultalgError):
    def __init__(self, identity, message=None):
        super().__init__(message or f"bimodule axiom fails: {identity}")
        self.identity = identity


class CoalgebraAxiomFails(ValidationError):
    pass


class ComoduleAxiomFails(ValidationError):
    pass


class InvalidWitness(MultalgError):
    pass


class ContractViolation(MultalgError):
    """A lazy multiplier evaluator broke its finiteness or coherence contract."""


class PropertyMismatch(MultalgError):
    """Two routes that must agree (implementation vs. cross-check) disagree."""
