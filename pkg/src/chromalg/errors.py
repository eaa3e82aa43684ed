"""Exception types shared across the library."""


class ChromalgError(Exception):
    """Base class for all library errors."""


class VariableMismatch(ChromalgError):
    """Polynomial operands use different variables."""


class InexactDivision(ChromalgError):
    """Exact polynomial division left a nonzero remainder."""


class InvalidParameters(ChromalgError):
    """Arguments outside the documented domain."""


class DenominatorNotInvertible(ChromalgError):
    """A rational function has a pole at the requested specialization.

    Raised when reducing num/den modulo m and gcd(den, m) is non-constant.
    """


class DisconnectedMap(ChromalgError):
    """Operation requires a connected map."""


class ContractLoop(ChromalgError):
    """Attempted to contract a loop edge."""


class BoundaryMismatch(ChromalgError):
    """Rectangle-boundary arities do not match."""


class ArityMismatch(ChromalgError):
    """Gluing arities are incompatible."""


class InvalidSize(ChromalgError):
    """Requested structure size is out of range."""


class TooManyEdges(ChromalgError):
    """Edge count exceeds the configured bound for an exponential algorithm."""


class IndexOutOfRange(ChromalgError):
    """Generator or strand index out of range."""


class StrandMismatch(ChromalgError):
    """Temperley-Lieb elements live on different strand counts."""


class OddRootParity(ChromalgError):
    """A closed evaluation received a coefficient with an odd sqrt(d) power."""
