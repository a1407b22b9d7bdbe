from collections.abc import Sequence

from model.analysis import GraphAnalysis
from model.sweep import SweepReport
from model.theorem import TheoremReport
from shared.utility import Utility
from view.report_viewer import ReportViewer

fixed = Utility.fixed


class TextView(ReportViewer):
    """Human-readable tables, six decimal places."""

    def show_analysis(self, analyses: Sequence[GraphAnalysis]):
        for index, a in enumerate(analyses):
            if index:
                self.write()
            t = a.transmissions
            self.write(f"graph6:         {a.graph6}")
            self.write(f"n:              {a.n}")
            self.write(f"degrees:        {list(a.degrees)}")
            self.write(f"diameter:       {a.diameter}")
            self.write(f"transmissions:  {list(t.tr)}")
            self.write(f"Tr_max/Tr_min:  {t.tr_max}/{t.tr_min}")
            self.write(f"Wiener index:   {t.wiener}")
            self.write(f"class:          {a.graph_class.label}")
            self.write("-" * 100)
            self.write(f"{'alpha':>8} {'mu_alpha':>12} {'x_max':>10} {'x_min':>10} {'gap':>10} {'bound':>10} {'slack':>10}  verdict")
            for row in a.rows:
                check = row.check
                verdict = check.verdict.value if check else row.note
                self.write(
                    f"{row.alpha:>8g} {fixed(row.mu):>12} {fixed(row.x_max):>10} {fixed(row.x_min):>10} {fixed(row.gap):>10} "
                    f"{fixed(check.bound if check else None):>10} {fixed(check.slack if check else None):>10}  {verdict}"
                )

    def show_graphs(self, lines: Sequence[str]):
        for line in lines:
            self.write(line)

    def show_sweep(self, report: SweepReport):
        self.write(f"order:                      {report.n}")
        self.write(f"alphas:                     {', '.join(f'{a:g}' for a in report.alphas)}")
        self.write(f"graphs read:                {report.graphs_total}")
        self.write(f"connected:                  {report.graphs_connected}")
        self.write(f"non-transmission-regular:   {report.graphs_nontransmission_regular}")
        if report.no_eligible_graphs:
            self.write("no eligible graphs")
            return
        self.write(f"min slack:                  {fixed(report.min_slack)}")
        for a in report.alphas:
            if a in report.min_gap:
                self.write(
                    f"  alpha {a:g}: min gap {fixed(report.min_gap[a])}, min slack {fixed(report.min_slack_by_alpha[a])}, "
                    f"argmin {' '.join(report.argmin[a])}"
                )
        self.write(f"equality set:               {' '.join(report.equality_set) or '-'}")
        self.write(f"equality set stable:        {'yes' if report.equality_set_stable else 'NO'}")
        self.write(f"violations:                 {len(report.violations)}")
        for v in report.violations:
            self.write(f"  VIOLATION {v.graph6} alpha={v.alpha:g} gap={fixed(v.gap)} bound={fixed(v.bound)} slack={v.slack:.3e}")
        for v in report.inconsistencies:
            self.write(f"  inconsistent equality {v.graph6} ({v.graph_class}) alpha={v.alpha:g} slack={v.slack:.3e}")
        for text in report.unexplained_equalities:
            self.write(f"  unexplained equality {text}")

    def show_theorem(self, report: TheoremReport):
        self.write(f"order {report.n}, alphas {', '.join(f'{a:g}' for a in report.alphas)}")
        self.write(f"extremal family ({len(report.family)}): {' '.join(report.family)}")
        for c in report.checks:
            where = " ".join(part for part in (c.graph6, None if c.alpha is None else f"alpha={c.alpha:g}") if part)
            self.write(f"  [{'PASS' if c.passed else 'FAIL'}] {c.name} {where} {c.detail}".rstrip())
        if report.sweep is not None:
            self.write()
            self.show_sweep(report.sweep)
        self.write()
        self.write("PASSED" if report.passed else f"FAILED ({len(report.failures)} checks)")
