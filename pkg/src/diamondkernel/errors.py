"""Exception types shared across the package."""


class DiamondKernelError(Exception):
    """Base class for all package errors."""


class UnknownVertexError(DiamondKernelError):
    """A vertex id was not found in the graph."""

    def __init__(self, vertex):
        super().__init__(f"unknown vertex: {vertex}")
        self.vertex = vertex


class FamilyError(DiamondKernelError):
    """The forbidden family is invalid or unsupported for this operation."""


class NotDiamondFreeError(DiamondKernelError):
    """An operation that requires a diamond-free graph got a witness occurrence."""

    def __init__(self, occurrence):
        super().__init__(f"graph is not diamond-free, witness vertices {sorted(occurrence.vertices)}")
        self.occurrence = occurrence


class InvariantError(DiamondKernelError):
    """A debug-mode structural invariant failed."""


class GuardError(DiamondKernelError):
    """A brute-force size guard refused the requested enumeration."""


class DescriptorError(DiamondKernelError):
    """A generator descriptor violates its structural preconditions."""


class ParseError(DiamondKernelError):
    """Instance file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
