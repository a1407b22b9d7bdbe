import logging
import sys
from collections.abc import Iterable, Iterator
from contextlib import contextmanager
from icontract import require

from controller.config import CliConfig, Command
from model.analysis import analyze_graph
from model.family import FamilyError, FamilyKind, FamilySpec, build_family
from model.graph6 import parse_graph6, read_graph6, to_graph6
from model.sweep import SweepInputError, sweep
from model.theorem import verify_family, verify_sweep
from model.validator import Verdict
from view.report_viewer import ReportViewer

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class Controller:
    """Runs one command against the model and hands the report to the view."""

    @require(lambda view: isinstance(view, ReportViewer), "View must be an instance of ReportViewer")
    def __init__(self, view: ReportViewer):
        """
        Initializes the Controller with a reference to the view.

        Args:
            view (ReportViewer): Renders the reports.
        """
        self.view = view

    def run(self, config: CliConfig) -> int:
        """
        Dispatches on the configured command.

        Returns:
            int: 0 when every check passed, 1 when a check failed.

        Raises:
            ValueError: Parse, usage and domain errors; the caller maps them to exit code 2.
        """
        match config.command:
            case Command.ANALYZE:
                return self.analyze(config)
            case Command.GENERATE:
                return self.generate(config)
            case Command.SWEEP:
                return self.sweep(config)
            case Command.VERIFY_THEOREM:
                return self.verify_theorem(config)

    @contextmanager
    def _lines(self, config: CliConfig) -> Iterator[Iterable[str]]:
        if config.graph6 is not None:
            yield [config.graph6]
        elif config.file is None or config.file == "-":
            if hasattr(sys.stdin, "reconfigure"):
                sys.stdin.reconfigure(errors="surrogateescape")
            yield sys.stdin
        else:
            try:
                handle = open(config.file, encoding="ascii", errors="surrogateescape")
            except OSError as e:
                raise SweepInputError(f"cannot read {config.file}: {e.strerror}")
            with handle:
                yield handle

    def analyze(self, config: CliConfig) -> int:
        """Spectral report for every input graph; exit 1 if any bound check is violated."""
        with self._lines(config) as lines:
            analyses = [
                analyze_graph(g, config.alphas, config.tolerance, text)
                for _, text, g in read_graph6(lines)
            ]
        self.view.show_analysis(analyses)
        violated = [a.graph6 for a in analyses for row in a.rows if row.check and row.check.verdict == Verdict.VIOLATION]
        for text in violated:
            logger.error("bound violated by %s", text)
        return EXIT_FAILED if violated else EXIT_OK

    def family_spec(self, config: CliConfig) -> FamilySpec:
        """Turns generate options into a FamilySpec."""
        if config.family is None:
            raise FamilyError("generate needs --family")
        kind = FamilyKind.from_label(config.family)
        match kind:
            case FamilyKind.COMPLETE_MULTIPARTITE:
                if config.parts is None:
                    raise FamilyError("the multipartite family needs --parts")
                return FamilySpec(kind, sum(config.parts), parts=config.parts)
            case FamilyKind.DVDR_FROM_REGULAR:
                if config.graph6 is None:
                    raise FamilyError("the dvdr family needs a regular base graph via --graph6")
                base = parse_graph6(config.graph6)
                return FamilySpec(kind, base.n + 1, base=base)
        if config.n is None:
            raise FamilyError(f"the {kind.label} family needs --n")
        return FamilySpec(kind, config.n, count=config.count, seed=config.seed, edge_probability=config.edge_probability)

    def generate(self, config: CliConfig) -> int:
        graphs = build_family(self.family_spec(config))
        logger.info("generated %d graphs of family %s", len(graphs), config.family)
        self.view.show_graphs([to_graph6(g) for g in graphs])
        return EXIT_OK

    def sweep(self, config: CliConfig) -> int:
        with self._lines(config) as lines:
            report = sweep(lines, config.alphas, config.tolerance, config.jobs)
        self.view.show_sweep(report)
        return EXIT_OK if report.passed else EXIT_FAILED

    def verify_theorem(self, config: CliConfig) -> int:
        """
        Family-only mode checks the closed forms on the generated extremal graphs;
        file mode adds an exhaustive sweep of the given enumeration.
        """
        if config.family_only or config.file is None:
            if config.n is None:
                raise FamilyError("verify-theorem needs --n")
            report = verify_family(config.n, config.alphas, config.tolerance)
        else:
            with self._lines(config) as lines:
                swept = sweep(lines, config.alphas, config.tolerance, config.jobs)
            if swept.n is None:
                raise SweepInputError(f"{config.file} contains no graphs")
            if config.n is not None and config.n != swept.n:
                raise SweepInputError(f"--n {config.n} does not match graphs of order {swept.n} in {config.file}")
            report = verify_sweep(verify_family(swept.n, config.alphas, config.tolerance), swept)
        self.view.show_theorem(report)
        for failure in report.failures:
            logger.error("check %s failed: %s %s", failure.name, failure.graph6 or "", failure.detail)
        return EXIT_OK if report.passed else EXIT_FAILED
