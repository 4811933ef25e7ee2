"""Exception types raised across the package."""


class GraphError(Exception):
    """Base class for every error this package raises on purpose."""


class MalformedInput(GraphError, ValueError):
    def __init__(self, position, reason):
        self.position = position
        self.reason = reason
        super().__init__(f"malformed input at {position}: {reason}")


class Unsupported(GraphError, ValueError):
    pass


class OutOfRange(GraphError, IndexError):
    pass


class TooLarge(GraphError, ValueError):
    """An exact solver was asked for more than its size or node budget allows."""


class SizeMismatch(GraphError, ValueError):
    pass


class ImproperColoring(GraphError, ValueError):
    pass


class BadOrder(GraphError, ValueError):
    pass


class HasBVertex(GraphError, ValueError):
    pass


class NotWeaklyChordal(GraphError, ValueError):
    pass


class NotABoat(GraphError, ValueError):
    pass


class NotSpecial(GraphError, ValueError):
    pass


class StructureViolation(GraphError):
    """A structural step failed in a way only a non-b-perfect input can cause."""


class NotBPerfect(GraphError, ValueError):
    def __init__(self, index, embedding):
        self.index = index
        self.embedding = embedding
        super().__init__(f"graph contains an induced F{index} at {embedding}")
