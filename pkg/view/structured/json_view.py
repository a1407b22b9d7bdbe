import json
from collections.abc import Sequence

from model.analysis import GraphAnalysis
from model.sweep import SweepReport
from model.theorem import TheoremReport
from view.report_viewer import ReportViewer


class JsonView(ReportViewer):
    """Machine-readable JSON; floats carry 15 significant digits."""

    def dump(self, document):
        self.write(json.dumps(document, indent=2))

    def show_analysis(self, analyses: Sequence[GraphAnalysis]):
        self.dump([a.to_dict() for a in analyses])

    def show_graphs(self, lines: Sequence[str]):
        self.dump({"graphs": list(lines)})

    def show_sweep(self, report: SweepReport):
        self.dump(report.to_dict())

    def show_theorem(self, report: TheoremReport):
        self.dump(report.to_dict())
