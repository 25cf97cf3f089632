"""Exception hierarchy shared by every module."""


class CayleyWalkError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(CayleyWalkError, ValueError):
    """A matrix or vector has the wrong (or an invalid) dimension."""


class ContractViolation(CayleyWalkError, ValueError):
    """An input breaks a precondition such as Hermiticity."""


class SpecValidationError(CayleyWalkError, ValueError):
    """A graph specification violates one of its invariants.

    The message always names the failed constraint.
    """


class ConventionMismatchError(CayleyWalkError, ValueError):
    """A generator/Hamiltonian convention does not apply to the given graph."""


class DomainError(CayleyWalkError, ValueError):
    """A scalar argument (typically time) lies outside its domain."""
