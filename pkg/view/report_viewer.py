import sys
from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import TextIO

from model.analysis import GraphAnalysis
from model.sweep import SweepReport
from model.theorem import TheoremReport


class ReportViewer(ABC):
    """Abstract base class for report renderers. Views format; they never compute."""

    def __init__(self, stream: TextIO | None = None):
        self.stream = sys.stdout if stream is None else stream

    def write(self, text: str = ""):
        self.stream.write(text + "\n")

    @abstractmethod
    def show_analysis(self, analyses: Sequence[GraphAnalysis]):
        """Renders per-graph spectral reports."""
        pass

    @abstractmethod
    def show_graphs(self, lines: Sequence[str]):
        """Renders generated graphs given as graph6 strings."""
        pass

    @abstractmethod
    def show_sweep(self, report: SweepReport):
        """Renders an aggregated sweep."""
        pass

    @abstractmethod
    def show_theorem(self, report: TheoremReport):
        """Renders the theorem acceptance checks."""
        pass
