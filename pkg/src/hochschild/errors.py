"""Exception hierarchy shared across the package."""


class HochschildError(Exception):
    """Base class for every error raised by this package."""


class LabelError(HochschildError, KeyError):
    pass


class ShapeError(HochschildError, ValueError):
    pass


class ContainmentError(HochschildError, ValueError):
    pass


class ParityError(HochschildError, ValueError):
    pass


class EmptyCompositionError(HochschildError, ValueError):
    """Composition of two degree-0 cochains would have degree -1."""


class CochainSyntaxError(HochschildError, ValueError):
    pass


class InvalidAutomorphismError(HochschildError, ValueError):
    pass


class NotACodifferentialError(HochschildError, ValueError):
    pass


class ClassificationError(HochschildError, RuntimeError):
    """A codifferential matched none of the canonical orbits (should be unreachable)."""


class ObstructionError(HochschildError, RuntimeError):
    pass


class SamplingInconsistencyError(HochschildError, RuntimeError):
    pass
