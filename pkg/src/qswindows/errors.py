"""Exception types shared across the package."""


class QSWindowsError(Exception):
    """Base class for all package errors."""


class InputError(QSWindowsError):
    """Malformed or inconsistent user input (CLI exit code 2)."""


class OnWallError(QSWindowsError):
    """A parameter point lies on a wall of the periodic arrangement."""

    def __init__(self, point, wall):
        self.point = point
        self.wall = wall
        super().__init__(f"point {point} lies on wall {wall}")


class NotAdjacentError(QSWindowsError):
    """An operation required an adjacent chamber pair (distance 1)."""


class InternalInconsistencyError(QSWindowsError):
    """A derived cross-check failed; indicates a bug, not bad input."""


class UnsupportedDimensionError(QSWindowsError):
    """Requested rendering or reduction outside the supported rank range."""
