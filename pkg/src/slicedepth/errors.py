"""Exception hierarchy.

Everything raised for bad *input* derives from :class:`SliceDepthError`
(itself a ``ValueError``), so callers and the CLI can catch one type.
:class:`IdentityViolation` is different: it signals an internal bug.
"""


class SliceDepthError(ValueError):
    pass


class EmptySequence(SliceDepthError):
    pass


class ZeroTailValue(SliceDepthError, ZeroDivisionError):
    pass


class BadParity(SliceDepthError):
    pass


class OutOfRange(SliceDepthError):
    pass


class OddLength(SliceDepthError):
    """An even continued fraction of odd length presents a 2-component link."""


class NotEven(SliceDepthError):
    pass


class InvalidPretzel(SliceDepthError):
    pass


class InvalidWitness(SliceDepthError):
    pass


class ParseError(SliceDepthError):
    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"line {row}")
        if column is not None:
            where.append(f"column {column!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


class InvariantViolation(ParseError):
    pass


class NotationError(SliceDepthError):
    """Malformed knot notation. ``column`` is 1-based."""

    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"column {column}: {message}")


class EmptyList(NotationError):
    pass


class IdentityViolation(RuntimeError):
    pass
