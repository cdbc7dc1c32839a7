"""Exception hierarchy shared by every psfig module."""


class PsfigError(Exception):
    """Base class for domain errors (bad options, missing boxes, bad geometry)."""


class DimensionError(PsfigError, ValueError):
    pass


class DimensionOverflow(DimensionError, OverflowError):
    pass


class OptionError(PsfigError, ValueError):
    def __init__(self, message, key=None, position=None):
        if position is not None:
            message = f"{message} (item {position})"
        super().__init__(message)
        self.key = key
        self.position = position


class BoundingBoxError(PsfigError):
    pass


class NoBoundingBox(BoundingBoxError):
    """Raised when no ``%%BoundingBox:`` line is found and none was supplied."""

    MESSAGE = "FATAL ERROR: no bb supplied or found"

    def __init__(self, file=None):
        super().__init__(self.MESSAGE)
        self.file = file


class MalformedBoundingBox(BoundingBoxError, ValueError):
    def __init__(self, line, reason):
        super().__init__(f"malformed %%BoundingBox line ({reason}): {line!r}")
        self.line = line


class GeometryError(PsfigError, ValueError):
    pass


class TeXScanError(PsfigError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
