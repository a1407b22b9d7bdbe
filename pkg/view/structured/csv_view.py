import csv
from collections.abc import Sequence

from model.analysis import GraphAnalysis
from model.sweep import SweepReport
from model.theorem import TheoremReport
from shared.utility import Utility
from view.report_viewer import ReportViewer

ROW_COLUMNS = ["graph6", "alpha", "tr_max", "mu_alpha", "gap", "bound", "slack", "class", "verdict"]
CHECK_COLUMNS = ["check", "passed", "graph6", "alpha", "detail"]


def _number(value: float | None) -> str:
    return "" if value is None else repr(Utility.significant(value))


class CsvView(ReportViewer):
    """One row per (graph, alpha) check; full precision."""

    def writer(self):
        return csv.writer(self.stream, lineterminator="\n")

    def show_analysis(self, analyses: Sequence[GraphAnalysis]):
        writer = self.writer()
        writer.writerow(ROW_COLUMNS)
        for a in analyses:
            for row in a.rows:
                check = row.check
                writer.writerow([
                    a.graph6, _number(row.alpha), a.transmissions.tr_max, _number(row.mu), _number(row.gap),
                    _number(check.bound if check else None), _number(check.slack if check else None),
                    a.graph_class.label, check.verdict.value if check else row.note,
                ])

    def show_graphs(self, lines: Sequence[str]):
        writer = self.writer()
        writer.writerow(["graph6"])
        for line in lines:
            writer.writerow([line])

    def show_sweep(self, report: SweepReport):
        writer = self.writer()
        writer.writerow(ROW_COLUMNS)
        for row in report.rows:
            c = row.check
            writer.writerow([
                row.graph6, _number(c.alpha), c.tr_max, _number(c.mu), _number(c.gap), _number(c.bound),
                _number(c.slack), c.graph_class.label, c.verdict.value,
            ])

    def show_theorem(self, report: TheoremReport):
        writer = self.writer()
        writer.writerow(CHECK_COLUMNS)
        for c in report.checks:
            writer.writerow([c.name, "pass" if c.passed else "fail", c.graph6 or "", _number(c.alpha), c.detail])
