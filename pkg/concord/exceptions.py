"""Exceptions raised by concord.

Two families exist. ``InputError`` covers anything wrong with what the caller
handed in (files, label columns, distributions, grids); ``DegenerateResult``
covers well-formed inputs for which an index is undefined.
"""


class ConcordError(Exception):
    """Base class for all concord errors."""


class InputError(ConcordError, ValueError):
    """The caller supplied unusable input."""


class EmptyInput(InputError):
    """A label column has zero rows."""

    def __init__(self, source: str = "input"):
        self.source = source
        super().__init__(f"EmptyInput: {source} has no rows")


class MissingLabel(InputError):
    """A row carries an empty or missing label token."""

    def __init__(self, row: int, source: str = "input"):
        self.row = row
        self.source = source
        super().__init__(f"MissingLabel: {source} row {row} has no label")


class ParseError(InputError):
    """A row of a delimited file could not be parsed."""

    def __init__(self, row: int | None, content: str, source: str = "input"):
        self.row = row
        self.content = content
        self.source = source
        where = f"row {row}" if row is not None else "unknown row"
        super().__init__(f"ParseError: {source} {where}: {content}")


class LengthMismatch(InputError):
    """Two label columns do not describe the same items."""

    def __init__(self, left: int, right: int, source: str = "input"):
        self.left = left
        self.right = right
        self.source = source
        super().__init__(
            f"LengthMismatch: {source} columns have {left} and {right} rows"
        )


class IoError(InputError, OSError):
    """A file could not be read."""

    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"IoError: cannot read {path}: {reason}")


class InvalidDistribution(InputError):
    """A joint probability matrix violates the distribution invariants."""


class InvalidSpec(InputError):
    """A scenario specification is out of range."""


class CapExceeded(InputError):
    """Brute-force enumeration was asked for more items than its cap."""


class AllocationRefused(InputError):
    """A dense K x L table would exceed the configured cell cap."""

    def __init__(self, cells: int, cap: int):
        self.cells = cells
        self.cap = cap
        super().__init__(
            f"AllocationRefused: dense table needs {cells} cells, cap is {cap}"
        )


class DegenerateResult(ConcordError):
    """An index is undefined for the given, otherwise valid, input."""


class TooFewItems(DegenerateResult, ValueError):
    """Not enough items for the requested quantity."""

    def __init__(self, n: int, minimum: int, quantity: str = "index"):
        self.n = n
        self.minimum = minimum
        self.quantity = quantity
        super().__init__(f"TooFewItems: {quantity} needs n >= {minimum}, got n = {n}")


class DegenerateNormalization(DegenerateResult, ZeroDivisionError):
    """The normalized ARI denominator is zero."""

    def __init__(self):
        super().__init__(
            "DegenerateNormalization: normalized ARI denominator is zero"
        )
