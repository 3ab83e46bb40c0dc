"""Exception types raised across the package."""


class FlexgroupError(Exception):
    """Base class for every error raised by flexgroup."""


# Cayley-table validation
class NoIdentity(FlexgroupError):
    """The table has no two-sided identity element."""


class MissingInverse(FlexgroupError):
    """Some element has no two-sided inverse."""


class NotAssociative(FlexgroupError):
    """The table violates associativity; the message names a witness triple."""


# constructor preconditions
class NotPrime(FlexgroupError):
    """An argument required to be prime is not."""


class EqualPrimes(FlexgroupError):
    """Two primes required to be distinct coincide."""


class SingularMatrix(FlexgroupError):
    """The acting matrix is not invertible mod p."""


class InvalidAction(FlexgroupError):
    """The action parameter has the wrong multiplicative order."""


class NotBijection(FlexgroupError):
    """A generator is not a permutation of the stated points."""


class OrderCapExceeded(FlexgroupError):
    """A construction or enumeration would exceed its order cap."""


# subgroup machinery
class IndexOutOfRange(FlexgroupError):
    """An element index is outside [0, order)."""


class NotASubgroup(FlexgroupError):
    """A member set is not closed under the group operation."""


class NotNormal(FlexgroupError):
    """A subgroup is not closed under conjugation."""


class TrivialGroup(FlexgroupError):
    """The operation is undefined on the trivial group."""


# flexibility engine
class KOutOfRange(FlexgroupError):
    """k is outside [1, d(G)]."""


class PreconditionViolated(FlexgroupError):
    """A documented precondition of the operation does not hold."""


class InternalInvariantViolation(FlexgroupError):
    """A computed result failed its own self-check; indicates a bug."""


# classification / verification
class UnclassifiedStructure(FlexgroupError):
    """No structural prediction applies; callers fall back to brute force."""


class RankTooSmall(FlexgroupError):
    """The check requires d(G) >= 3."""


class RankMismatch(FlexgroupError):
    """The check requires d(G) = 2."""


# spec-string parsing
class ParseError(FlexgroupError):
    """Malformed group-spec text; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
