class Gsp4Exception(Exception):
    """Base exception for gsp4lift."""
    pass


class NotPrime(Gsp4Exception):
    """Raised when an argument that must be an odd prime is not one."""
    pass


class OutOfRange(Gsp4Exception):
    """Raised when an exponent is outside [0, p - 1)."""
    pass


class NotInvertible(Gsp4Exception):
    """Raised when a residue or a matrix is not a unit."""
    pass


class BernoulliSelfCheckError(Gsp4Exception):
    """Raised when the recurrence produces a nonzero odd Bernoulli residue."""
    pass


class CacheError(Gsp4Exception):
    """Base exception for the Bernoulli cache."""
    pass


class CacheIOError(CacheError):
    """Raised when a cache file cannot be read or written."""
    pass


class CacheFormatError(CacheError):
    """Raised when a cache file is corrupt or truncated."""
    pass


class PrimeMismatch(CacheError):
    """Raised when a cache file declares a different prime."""

    def __init__(self, expected: int, found: int):
        self.expected = expected
        self.found = found
        super().__init__(f"cache file is for p={found}, requested p={expected}")


class EquivalenceViolation(Gsp4Exception):
    """Raised when conditions (1)-(3) and (a)-(c) disagree on a pair."""

    def __init__(self, p: int, alpha: int, beta: int, detail: str):
        self.p = p
        self.alpha = alpha
        self.beta = beta
        super().__init__(f"p={p}, pair=({alpha},{beta}): {detail}")


class IdentityViolation(Gsp4Exception):
    """Raised when a bracket identity fails."""

    def __init__(self, bullet: str, p: int):
        self.bullet = bullet
        self.p = p
        super().__init__(f"identity {bullet!r} fails for p={p}")


class NotInAlgebra(Gsp4Exception):
    """Raised when a matrix expected in sp4 is not in sp4."""
    pass


class SimilitudeMismatch(Gsp4Exception):
    """Raised when nu(R) does not match psi modulo p^m."""
    pass


class ExhaustiveLimitExceeded(Gsp4Exception):
    """Raised when an exhaustive scan is requested above the configured limit."""
    pass


class CountBoundViolation(Gsp4Exception):
    """Raised when the exact valid-pair count falls below the counting lower bound."""

    def __init__(self, p: int, count: int, bound: int):
        self.p = p
        self.count = count
        self.bound = bound
        super().__init__(f"p={p}: {count} valid pairs, below the lower bound {bound}")
