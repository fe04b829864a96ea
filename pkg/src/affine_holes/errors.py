"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Vector or matrix shapes do not match."""


class NotPointedError(ValueError):
    """The cone generated by the columns contains a line."""


class UnboundedRegionError(ValueError):
    """A region that should be bounded admits an unbounded direction."""


class ZeroColumnError(ValueError):
    """A generator matrix has an all-zero column."""


class GcdNotOneError(ValueError):
    pass


class MultiRowError(ValueError):
    pass


class ParseError(ValueError):
    """Malformed matrix file.  ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
