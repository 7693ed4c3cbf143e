"""Exception hierarchy shared by every module of the package."""


class PaleyDesignError(Exception):
    """Base class for all errors raised by paleydesigns."""


class InvalidSpecError(PaleyDesignError, ValueError):
    """Field parameters are malformed (non-prime p, reducible modulus, ...)."""


class FieldDomainError(PaleyDesignError, ArithmeticError):
    """Arithmetic outside the domain of an operation, e.g. inverting zero."""


class UnsupportedParametersError(PaleyDesignError, ValueError):
    """The (p, r, kind) combination does not define a graph of this family."""


class InvalidArgumentError(PaleyDesignError, ValueError):
    """An operation received arguments violating its preconditions."""


class ResourceLimitError(PaleyDesignError, RuntimeError):
    """Requested computation exceeds a configured size cap."""


class StructuralFailure(PaleyDesignError, AssertionError):
    """A structural identity that must hold was observed to fail.

    ``witness`` carries whatever locates the failure (a vertex pair, a
    design name, a relation label).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class FamilyValidationError(PaleyDesignError, ValueError):
    """Block-family representatives clash (isomorphic or complementary)."""

    def __init__(self, message, clashes=()):
        super().__init__(message)
        self.clashes = list(clashes)


class NotADesignError(StructuralFailure):
    """Pair incidences are not constant; ``witness`` holds two differing pairs."""
