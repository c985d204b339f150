"""Exception hierarchy shared by every szx module."""


class SZXError(Exception):
    """Base class for all library errors."""


class ShapeError(SZXError, ValueError):
    """Binary matrix dimensions are incompatible."""


class ParameterError(SZXError, ValueError):
    """A constructor or rule received parameters outside its schema."""


class CompositionError(SZXError, TypeError):
    """Sequential composition of diagrams whose wire types disagree."""

    def __init__(self, left, right, message=None):
        self.left = left
        self.right = right
        if message is None:
            message = f"cannot compose: output type {left} does not match input type {right}"
        super().__init__(message)


class StructuralError(SZXError):
    """The diagram tree contains something that is not a diagram."""


class ResourceError(SZXError):
    """Dense interpretation would exceed the configured qubit budget."""


class ComparisonError(SZXError, TypeError):
    """Two diagrams with different wire types were compared."""

    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(
            f"cannot compare diagrams of types {first[0]} -> {first[1]} "
            f"and {second[0]} -> {second[1]}"
        )


class MatchError(SZXError):
    """A rule side does not occur at the requested position."""


class ParseError(SZXError, ValueError):
    """Malformed textual input, with 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
