"""Exception types shared across the package.

Exceptions signal malformed input or violated preconditions.  Negative
domain verdicts (a freeness test failing, a probe finding nothing) are
ordinary return values, never exceptions.
"""


class MendoError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(MendoError):
    """Matrix/vector shapes are incompatible."""


class CharacteristicMismatch(MendoError):
    """Operands live over different characteristics."""


class RootObstruction(MendoError):
    """An n-th root was requested with n divisible by the characteristic."""


class NotInDivisibleHull(MendoError):
    """Element lies outside the divisible hull it was claimed to be in."""


class NotIndependent(MendoError):
    """Tuple fails multiplicative independence over the base subgroup."""


class MalformedSystem(MendoError):
    """Equation system violates a structural requirement (gcd or indexing)."""


class SystemTooLarge(MendoError):
    """Equation index set would exceed the configured size guard."""


class OutsideDomain(MendoError):
    """Homomorphism applied to an element outside its domain."""


class SystemViolated(MendoError):
    """Proposed images fail the transported equation system."""


class IntersectionTooLarge(MendoError):
    """The two factor groups intersect beyond the declared base."""


class DisagreeOnBase(MendoError):
    """The two homomorphisms differ on the shared base subgroup."""


class TermSyntaxError(MendoError):
    """Term source text is not well-formed.  Carries the failing offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class UnassignedVariable(MendoError):
    """Term evaluation hit a variable with no assigned value."""


class LimitExceeded(MendoError):
    """Requested discrete-log table exceeds the configured bound."""


class LevelMissing(MendoError):
    """Exponent family has no residue at the requested level."""


class ZeroPolynomial(MendoError):
    """The zero polynomial was supplied where a nonzero one is required."""


class ArityMismatch(MendoError):
    """Counts of polynomials, targets or coordinates do not agree."""


class CriterionFails(MendoError):
    """Group invariants fail the pseudofinite-cyclic criterion."""
