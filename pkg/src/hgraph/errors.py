"""Exception types raised by the graph structures and algorithms."""


class HGraphError(Exception):
    """Base class for every error raised by this package."""


class DuplicateVertex(HGraphError, ValueError):
    pass


class UnknownVertex(HGraphError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownNeighbor(UnknownVertex):
    pass


class SelfLoop(HGraphError, ValueError):
    pass


class DuplicateEdge(HGraphError, ValueError):
    pass


class UnknownEdge(HGraphError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class BadArity(HGraphError, ValueError):
    pass


class EmptyGraph(HGraphError, ValueError):
    pass


class SizeLimit(HGraphError, ValueError):
    pass


class InternalInconsistency(HGraphError, AssertionError):
    """A computed quantity violated an identity that must always hold.

    Never expected in practice; it signals a bug rather than bad input.
    """
