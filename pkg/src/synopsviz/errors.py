"""Exception types shared across the package."""


class SynopsVizError(Exception):
    """Base class for all errors raised by this package."""


class UnreadableSourceError(SynopsVizError):
    """The input file/stream could not be opened or decoded."""


class TurtleSyntaxError(SynopsVizError):
    """Fatal Turtle syntax error. Carries the 1-based position of the offence."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DatasetTooLargeError(SynopsVizError):
    """Input exceeds the configured triple cap."""


class UnknownClassError(SynopsVizError):
    pass


class UnknownPropertyError(SynopsVizError):
    pass


class EmptyPointSetError(SynopsVizError):
    """A hierarchy was requested over a selection with no usable points."""


class ConfigOutOfBoundsError(SynopsVizError):
    """Hierarchy configuration violates the guard rails."""


class UnknownNodeError(SynopsVizError):
    pass


class NotALeafError(SynopsVizError):
    """Raw points were requested for an internal node."""


class UnknownDatasetError(SynopsVizError):
    pass
