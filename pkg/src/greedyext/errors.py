"""Exception hierarchy shared across the package."""


class GreedyExtError(Exception):
    """Base class for all library errors."""


class CycleDetected(GreedyExtError):
    """The given relation pairs contain a directed cycle."""


class IndexOutOfRange(GreedyExtError):
    """An element index is outside [0, n)."""


class Underflow(GreedyExtError):
    """An operation would leave the poset empty."""


class ArityMismatch(GreedyExtError):
    """Component list length does not match the operation's arity rules."""


class SizeMismatch(GreedyExtError):
    """A permutation's domain does not match the poset's element count."""


class CapExceeded(GreedyExtError):
    """Enumeration would produce more results than the configured cap."""

    def __init__(self, limit):
        super().__init__(f"enumeration cap of {limit} exceeded")
        self.limit = limit


class NotALinearExtension(GreedyExtError):
    """The given sequence is not a linear extension of the poset."""


class NotAutomorphism(GreedyExtError):
    """The given permutation is not an order automorphism."""


class NotGreedy(GreedyExtError):
    """The given linear extension is not greedy."""


class PreconditionViolated(GreedyExtError):
    """An operation's stated precondition does not hold."""


class NotNFree(PreconditionViolated):
    """The poset contains an N; the operation requires N-freeness."""


class IsChain(PreconditionViolated):
    """The poset is totally ordered; the operation requires incomparability."""


class SizeError(GreedyExtError):
    """A requested size parameter is out of range."""


class ProbabilityRange(GreedyExtError):
    """An edge probability is outside [0, 1]."""


class LimitExceeded(GreedyExtError):
    """A configured enumeration size limit was exceeded."""


class PosetSyntaxError(GreedyExtError):
    """A poset document failed to parse."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
