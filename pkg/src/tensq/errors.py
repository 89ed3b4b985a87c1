"""Exception types shared across the package."""


class CapacityError(RuntimeError):
    """An enumeration would exceed its configured element cap."""


class AmbientMismatchError(ValueError):
    """Two elements do not live in the same ambient group (degree mismatch)."""


class EnumerationLimitError(RuntimeError):
    """Coset enumeration hit its coset or time limit.

    The partial table is preserved on the ``table`` attribute for diagnostics.
    """

    def __init__(self, message, table=None):
        super().__init__(message)
        self.table = table


class StateError(RuntimeError):
    """An operation was applied to an object in the wrong state
    (e.g. reading permutations off a table that is not closed)."""
