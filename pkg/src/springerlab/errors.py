"""Exception hierarchy. Every domain error derives from ``SpringerLabError``."""


class SpringerLabError(ValueError):
    """Base class for domain errors (CLI exit status 1)."""


class SizeMismatch(SpringerLabError):
    pass


class RankTooLarge(SpringerLabError):
    pass


class MalformedRecipe(SpringerLabError):
    pass


class NoOrdinaryRepresentative(SpringerLabError):
    pass


class ShapeMismatch(SpringerLabError):
    pass


class PadTooSmall(SpringerLabError):
    pass


class NonUniqueMinimum(SpringerLabError):
    pass


class GroupMismatch(SpringerLabError):
    pass


class DegenerateDType(SpringerLabError):
    """A type D pair with equal rows where the split representation is needed."""


class SpecMismatch(SpringerLabError):
    pass


class UnsupportedJInduction(SpringerLabError):
    pass


class CounterexampleFound(SpringerLabError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NoMaximum(SpringerLabError):
    pass


class InvalidMarking(SpringerLabError):
    pass


class TooLarge(SpringerLabError):
    pass
