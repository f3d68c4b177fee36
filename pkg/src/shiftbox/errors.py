"""Exception hierarchy.

The CLI maps these onto exit codes: ``LimitExceeded`` -> 2,
``PreconditionError`` -> 3, ``ParseError`` -> 4.
"""


class GroupError(Exception):
    """Base class for every error raised by this package."""


class ParseError(GroupError, ValueError):
    pass


class AlphabetMismatch(GroupError, ValueError):
    pass


class LimitExceeded(GroupError):
    """Coset enumeration hit ``max_cosets``.

    Either the index is infinite or the limit is too small; the two cases
    cannot be told apart.
    """

    def __init__(self, max_cosets):
        super().__init__(f"coset enumeration exceeded {max_cosets} cosets")
        self.max_cosets = max_cosets


class PreconditionError(GroupError, ValueError):
    pass


class TupleLargerThanIndex(PreconditionError):
    pass


class RankTooLarge(PreconditionError):
    pass


class RankTooSmall(PreconditionError):
    pass


class NoEmptyCoset(PreconditionError):
    pass


class NoEntryInH(PreconditionError):
    pass


class NotLRCleaned(PreconditionError):
    pass


class MultipleEntriesInH(PreconditionError):
    pass


class NotATransversal(PreconditionError):
    pass


class NonSquareBlocks(PreconditionError):
    pass


class IndexTooLarge(PreconditionError):
    pass


class NotNormal(PreconditionError):
    pass


class EntryNotInSubgroup(PreconditionError):
    pass


class SearchTooLarge(PreconditionError):
    pass
