"""Exception types shared across the toolkit."""


class CurvlabError(Exception):
    """Base class for all curvlab errors."""

    #: short machine-readable condition name, used by the CLI/service
    condition = "Error"


class DisconnectedGraph(CurvlabError):
    condition = "DisconnectedGraph"


class SingleVertex(CurvlabError):
    """Curvature of a one-vertex graph is not finite."""

    condition = "SingleVertex"


class NotABlockGraph(CurvlabError):
    condition = "NotABlockGraph"


class NotATree(CurvlabError):
    condition = "NotATree"


class WrongDiameter(CurvlabError):
    condition = "WrongDiameter"


class NotApplicable(CurvlabError):
    """Requested quantity is undefined for this graph (e.g. negative curvature)."""

    condition = "NotApplicable"


class ConditionViolated(CurvlabError):
    """A composition-theorem hypothesis (C1, C2 or C3) fails.

    ``which`` names the violated condition so callers can report it
    individually instead of as a blanket failure.
    """

    condition = "ConditionViolated"

    def __init__(self, which: str, detail: str = ""):
        self.which = which
        self.detail = detail
        msg = which if not detail else f"{which}: {detail}"
        super().__init__(msg)


class NotFoundWithinBudget(CurvlabError):
    condition = "NotFoundWithinBudget"


class DataFileInvalid(CurvlabError):
    """A bundled data file failed its load-time validation."""

    condition = "DataFileInvalid"


class GraphFormatError(CurvlabError):
    """Malformed edge-list or graph6 input."""

    condition = "GraphFormatError"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnboundedProgram(CurvlabError):
    """The linear program is unbounded (never happens for distance-matrix systems)."""

    condition = "UnboundedProgram"
