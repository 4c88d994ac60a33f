"""curvlab: exact Steinerberger graph curvature toolkit."""

from .graphs import Graph  # noqa: F401
from .curvature import CurvatureSolution, steinerberger_curvature  # noqa: F401
from .analysis import AnalysisReport, analyze  # noqa: F401

__version__ = "0.1.0"
