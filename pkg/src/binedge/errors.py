"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """Raised for out-of-range sizes, malformed vertex sets or index lists."""


class Unsupported(Exception):
    """Raised when an operation is asked for input it does not handle (e.g. disconnected graphs)."""


class TooLarge(Exception):
    """Raised by the oracle when a strand would exceed the configured row bound.

    ``rows`` is the estimated size that triggered the refusal and ``bound`` the
    limit in force.
    """

    def __init__(self, what: str, rows: int, bound: int):
        super().__init__(f"{what}: {rows} rows exceeds the bound of {bound}")
        self.what = what
        self.rows = rows
        self.bound = bound
