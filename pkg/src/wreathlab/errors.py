"""Exception hierarchy shared by all modules."""


class WreathLabError(Exception):
    """Base class for errors raised by wreathlab."""


class GraphError(WreathLabError, ValueError):
    """Invalid graph data or a graph that violates an operation's precondition."""


class DisconnectedGraphError(GraphError):
    """Raised when an operation needs a connected graph."""


class BudgetExceededError(WreathLabError):
    """Raised when a computation would exceed a configured size budget."""


class ParseError(GraphError):
    """Malformed edge-list text."""
