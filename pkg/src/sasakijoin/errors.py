"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`SasakiJoinError`, so callers (the CLI in particular) can separate
computation failures from programming errors.
"""


class SasakiJoinError(Exception):
    pass


class InvalidInput(SasakiJoinError, ValueError):
    pass


class InvalidParameter(InvalidInput):
    pass


class NoSolution(SasakiJoinError):
    """The weighted-homogeneity system has no positive solution."""


class NotUnique(SasakiJoinError):
    """The weighted-homogeneity system has a solution space of dimension != 1."""


class NotWeightedHomogeneous(NoSolution):
    pass


class WeightsUndetermined(NotUnique):
    pass


class PolySyntaxError(InvalidInput):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class InconsistentSeifertData(SasakiJoinError):
    pass


class NullType(SasakiJoinError):
    """|w| == |d|: transversally Calabi-Yau, neither positive nor negative."""


class EuclideanOrbifold(SasakiJoinError):
    pass


class NotIsolatedOrInvalid(SasakiJoinError):
    pass


class CalculusError(SasakiJoinError):
    pass


class TooLarge(SasakiJoinError):
    pass


class TypeMismatch(SasakiJoinError):
    pass


class Unsupported(SasakiJoinError):
    pass


class UnknownInvariant(SasakiJoinError):
    pass
