"""Exception types raised by the library."""


class GraphError(ValueError):
    """Base class for every error raised by spantree."""


class InvalidArgument(GraphError):
    pass


class MissingEdge(GraphError):
    pass


class InvalidContraction(GraphError):
    pass


class NotConnected(GraphError):
    pass


class MustStripLoops(GraphError):
    pass


class TooSmall(GraphError):
    pass


class TooLarge(GraphError):
    """A brute-force guard was exceeded."""


class InvalidTerminals(GraphError):
    pass


class ParseError(GraphError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
