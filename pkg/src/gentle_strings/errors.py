"""Exception hierarchy.

Every error carries a category used by the CLI to pick a stable exit code:
``parse`` -> 2, ``precondition`` -> 3.
"""


class GentleError(Exception):
    category = "precondition"


class ParseError(GentleError):
    category = "parse"

    def __init__(self, line, reason, path=None):
        self.line = line
        self.reason = reason
        self.path = path
        where = f"{path}:" if path else ""
        super().__init__(f"{where}{line}: {reason}")


class PresentationError(GentleError, ValueError):
    """Structurally malformed quiver or relation data."""


class UnknownVertex(GentleError, KeyError):
    pass


class UnknownArrow(GentleError, KeyError):
    pass


class InvalidString(GentleError, ValueError):
    pass


class InfiniteDimensional(GentleError):
    pass


class NotGentle(GentleError):
    pass


class Unsatisfiable(GentleError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("sign constraints have an odd cycle: " + " -> ".join(self.cycle))


class PreconditionViolated(GentleError):
    pass


class Undefined(GentleError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"undefined: {reason}")


class ShapeMismatch(GentleError, ValueError):
    pass


class NotTriangulation(GentleError):
    pass


class InconsistentRecord(GentleError):
    pass


class InvalidCrossing(InconsistentRecord):
    pass


class NotAString(InconsistentRecord):
    pass


class DatasetInvalid(GentleError):
    pass
