"""
Exception hierarchy for retoric.

Every domain error is a ValueError carrying the name of the condition that
failed, so command-line reports can state it verbatim.
"""
from typing import Optional


class RetoricError(ValueError):
    """Base class; `predicate` names the violated condition."""

    predicate = "valid input"

    def __init__(self, message: str, predicate: Optional[str] = None):
        super().__init__(message)
        if predicate is not None:
            self.predicate = predicate


class InvalidInvolution(RetoricError):
    predicate = "tau * tau == identity"


class NotInKernel(RetoricError):
    predicate = "v in ker(1 -/+ tau)"


class NotStable(RetoricError):
    predicate = "tau(S) == S"


class NotPrimitive(RetoricError):
    predicate = "N/S torsion free"


class NotAntiInvariant(RetoricError):
    predicate = "(1 + tau) v == 0"


class NotInSupport(RetoricError):
    predicate = "v in support(fan)"


class NotAFan(RetoricError):
    predicate = "cones meet along common faces"


class NotStronglyConvex(RetoricError):
    predicate = "cone contains no line"


class NotSmooth(RetoricError):
    predicate = "smooth"


class NotInvariant(RetoricError):
    predicate = "tau(c) == c"


class NotAffine(RetoricError):
    predicate = "affine (faces of one invariant cone)"


class Twisted(RetoricError):
    predicate = "twist class == 0"


class PreconditionFailed(RetoricError):
    predicate = "precondition"


class ConstraintViolated(RetoricError):
    predicate = "realisability constraints"


class NotCoprime(RetoricError):
    predicate = "gcd(p, q) == 1"


class UnsupportedClassification(RetoricError):
    """Raised when no homeomorphism type is known; `topology` holds the Unsupported tag."""

    predicate = "classified type"

    def __init__(self, message: str, topology=None, predicate: Optional[str] = None):
        super().__init__(message, predicate)
        self.topology = topology


class ParseError(RetoricError):
    predicate = "well-formed document"


class ValidationError(RetoricError):
    predicate = "valid variety"


# Exit code 2 in the command-line front end.
PRECONDITION_ERRORS = (
    PreconditionFailed,
    NotSmooth,
    NotAffine,
    Twisted,
    NotInvariant,
    NotInSupport,
    ConstraintViolated,
    NotStronglyConvex,
    NotAFan,
    NotStable,
    NotPrimitive,
    NotCoprime,
)
