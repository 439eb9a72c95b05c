"""Exception hierarchy shared across the package.

``InputError`` subclasses signal malformed or unsupported input (CLI exit
status 2); ``ResourceCapError`` subclasses signal that a computation was
aborted because it would not terminate or exceeded a configured cap
(CLI exit status 3).
"""


class LeavittError(Exception):
    """Base class for all package errors."""


class InputError(LeavittError):
    """Malformed, inconsistent, or unsupported input."""


class SchemaError(InputError):
    """A JSON document does not match the graph schema."""


class UnknownVertexError(InputError):
    """A vertex id does not occur in the graph."""


class UnknownEdgeError(InputError):
    """An edge id or concrete edge address does not occur in the graph."""


class ContextMismatchError(InputError):
    """Operands belong to different algebra contexts (graph or field)."""


class NotSupportedError(InputError):
    """The operation's precondition is violated for this input."""


class ExpressionError(InputError):
    """Lexical or syntactic error while parsing an algebra expression."""


class ResourceCapError(LeavittError):
    """A configured enumeration cap was exceeded."""


class InfinitelyManyCyclesError(ResourceCapError):
    """An infinite edge bundle lies on a closed path, so the set of simple
    cycles is infinite."""
