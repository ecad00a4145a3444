"""Exception hierarchy shared across the package."""


class SteinerError(Exception):
    """Base class for all errors raised by steinerloops."""


class InvalidSystemError(SteinerError):
    """A triple system violates the pair-coverage or shape invariants."""


class InvalidTableError(SteinerError):
    """A Cayley table is not a Latin square / has no identity at index 0."""


class NotSteinerError(SteinerError):
    """An operation requiring a Steiner loop/quasigroup got something else."""


class TermSyntaxError(SteinerError):
    """Malformed term or identity string.

    Carries the byte offset of the first offending character.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class TermEvalError(SteinerError):
    """Unassigned variable, or the constant 1 evaluated against a quasigroup."""


class TripleConditionError(SteinerError):
    """Base for precondition failures on (x, y, z) triple arguments."""


class CollinearTripleError(TripleConditionError):
    """The three points lie in a common block (or are not distinct)."""


class NonAssociatingTripleError(TripleConditionError):
    """The triple does not satisfy x(yz) = (xy)z."""
