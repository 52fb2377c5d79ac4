"""Exception types shared across the package."""


class IomlatError(Exception):
    """Base class for all package errors."""


class InputError(IomlatError, ValueError):
    """Bad argument: out-of-range index, unknown name, violated precondition."""


class FormatError(InputError):
    """Malformed algtab / ortlat / statement file."""


class ParseError(InputError):
    """Syntax error in the term language.

    `offset` is the byte offset into the source text where parsing failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class ConsistencyError(IomlatError):
    """An internal invariant that should hold by theorem was violated.

    Signals either a corrupted table or a bug, never a user mistake.
    """
