"""Exception types shared across the package."""


class TangleError(Exception):
    pass


class TypeMismatch(TangleError):
    """Composite of two terms whose boundary objects or words disagree."""


class IllFormed(TangleError):
    """A generating 2-morphism whose indices violate its constraint."""


class BadParameters(TangleError):
    pass


class InternalTypingFailure(TangleError):
    """A relation builder produced an ill-typed side: a transcription bug."""


class NotApplicable(TangleError):
    pass


class BoundaryMismatch(TangleError):
    pass


class NotClosed(TangleError):
    pass


class Unsupported(TangleError):
    pass


class ParseError(TangleError):
    def __init__(self, message, line=0, column=0, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        loc = f"line {line}, column {column}: " if line else ""
        exp = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{loc}{message}{exp}")


class DocumentTypeError(TangleError):
    """A parsed document whose slices or frame annotations do not type-check."""

    def __init__(self, message, line=0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)
