"""Exception hierarchy shared by every module."""


class AmalgamError(ValueError):
    """Base class for domain errors raised by the library."""


class OverlappingPieces(AmalgamError):
    pass


class NegativeCoefficient(AmalgamError):
    pass


class UnsupportedCombination(AmalgamError):
    """The result would leave the piecewise-power class (or is not implemented exactly)."""


class NotMonotone(AmalgamError):
    pass


class InvalidSpec(AmalgamError):
    pass


class NotNormable(AmalgamError):
    pass


class Undecided(AmalgamError):
    pass


class EmptyCandidates(AmalgamError):
    pass


class DominationFailed(AmalgamError):
    pass


class WitnessUnavailable(AmalgamError):
    pass


class UnsupportedIndices(AmalgamError):
    pass


class IndicesNotApplicable(AmalgamError):
    pass
