"""Exception types shared across the package."""


class TrisectError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(TrisectError):
    """Malformed or out-of-range input."""


class ViolatedD(TrisectError):
    """A replacement class does not meet the old class exactly once."""


class ViolatedLagrangian(TrisectError):
    """A replacement class has nonzero pairing with an untouched class."""


class NotPrimitive(TrisectError):
    """A tuple of classes does not span a primitive sublattice."""


class MissingAnnotation(TrisectError):
    """An operation needs a pair annotation that is absent."""


class MissingGeometry(TrisectError):
    """An operation needs geometric intersection counts that are absent."""


class NotGood(TrisectError):
    """Two cut systems fail the matched-pair condition."""


class NoNegativeSubarc(TrisectError):
    """A sign word has no adjacent pair of opposite signs."""


class LoopViolation(TrisectError):
    """Base class for loop validation failures; names the first violation."""


class BadEdge(LoopViolation):
    def __init__(self, step, reason):
        self.step = step
        self.reason = reason
        super().__init__(f"edge {step}: {reason}")


class BadJunction(LoopViolation):
    def __init__(self, which, reason):
        self.which = which
        self.reason = reason
        super().__init__(f"junction {which}: {reason}")


class BadSegment(LoopViolation):
    def __init__(self, subgraph, reason):
        self.subgraph = subgraph
        self.reason = reason
        super().__init__(f"segment {subgraph}: {reason}")
