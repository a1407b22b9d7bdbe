import logging
import os
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from icontract import require

from model.bounds import alpha_below_one
from model.classifier import classify
from model.graph import is_connected
from model.graph6 import Graph6Error, parse_graph6, read_graph6
from model.distance import apsp
from model.spectra import analyze_spectrum, transmissions
from model.validator import DEFAULT_TOLERANCE, BoundCheck, Validator, Verdict
from shared.utility import Utility

logger = logging.getLogger(__name__)

TIE_TOLERANCE = 1e-12


class SweepInputError(ValueError):
    """Raised for unparsable lines or a stream mixing graph orders."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        super().__init__(message if line_number is None else f"line {line_number}: {message}")


@dataclass(frozen=True)
class SweepRow:
    """One (graph, alpha) bound check, keyed by the graph6 text."""
    graph6: str
    check: BoundCheck


@dataclass(frozen=True)
class SweepFinding:
    """A (graph, alpha) pair that needs attention: a violation or an inconsistent equality."""
    graph6: str
    alpha: float
    gap: float
    bound: float
    slack: float
    graph_class: str

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "alpha": Utility.significant(self.alpha),
            "gap": Utility.significant(self.gap),
            "bound": Utility.significant(self.bound),
            "slack": Utility.significant(self.slack),
            "class": self.graph_class,
        }


@dataclass(frozen=True)
class _GraphOutcome:
    graph6: str
    connected: bool
    transmission_regular: bool
    checks: tuple[BoundCheck, ...]


@dataclass
class SweepReport:
    """
    Aggregated bound checks over a stream of graphs of one order.

    Attributes:
        n (int | None): Order of the graphs, None for an empty stream.
        alphas (list[float]): alpha grid.
        graphs_total (int): Graphs read.
        graphs_connected (int): Connected graphs.
        graphs_nontransmission_regular (int): Connected graphs the bound applies to.
        min_slack (float | None): Smallest gap - bound over every graph and alpha.
        min_gap (dict[float, float]): Smallest gap per alpha.
        min_slack_by_alpha (dict[float, float]): Smallest slack per alpha.
        argmin (dict[float, list[str]]): Graphs within 1e-12 of the minimum gap per alpha, sorted.
        equality_set (list[str]): Graphs with a structural equality verdict, sorted.
        equality_set_stable (bool): Whether the equality set is the same at every alpha.
        violations (list[SweepFinding]): Bound violations.
        inconsistencies (list[SweepFinding]): Structural equalities whose slack exceeds tolerance.
        unexplained_equalities (list[str]): Numeric equality at every alpha without an extremal class.
        rows (list[SweepRow]): Every check in input order; CSV only.
    """
    n: int | None
    alphas: list[float]
    graphs_total: int = 0
    graphs_connected: int = 0
    graphs_nontransmission_regular: int = 0
    min_slack: float | None = None
    min_gap: dict[float, float] = field(default_factory=dict)
    min_slack_by_alpha: dict[float, float] = field(default_factory=dict)
    argmin: dict[float, list[str]] = field(default_factory=dict)
    equality_set: list[str] = field(default_factory=list)
    equality_set_stable: bool = True
    violations: list[SweepFinding] = field(default_factory=list)
    inconsistencies: list[SweepFinding] = field(default_factory=list)
    unexplained_equalities: list[str] = field(default_factory=list)
    rows: list[SweepRow] = field(default_factory=list)

    @property
    def no_eligible_graphs(self) -> bool:
        return self.graphs_nontransmission_regular == 0

    @property
    def passed(self) -> bool:
        return not (self.violations or self.inconsistencies or self.unexplained_equalities) and self.equality_set_stable

    def to_dict(self) -> dict:
        """JSON-ready form; floats at 15 significant digits, rows omitted."""
        key = _alpha_key
        return {
            "n": self.n,
            "alphas": [Utility.significant(a) for a in self.alphas],
            "graphs_total": self.graphs_total,
            "graphs_connected": self.graphs_connected,
            "graphs_nontransmission_regular": self.graphs_nontransmission_regular,
            "no_eligible_graphs": self.no_eligible_graphs,
            "min_slack": Utility.significant(self.min_slack),
            "min_gap": {key(a): Utility.significant(v) for a, v in self.min_gap.items()},
            "min_slack_by_alpha": {key(a): Utility.significant(v) for a, v in self.min_slack_by_alpha.items()},
            "argmin": {key(a): list(v) for a, v in self.argmin.items()},
            "equality_set": list(self.equality_set),
            "equality_set_stable": self.equality_set_stable,
            "violations": [v.to_dict() for v in self.violations],
            "inconsistencies": [v.to_dict() for v in self.inconsistencies],
            "unexplained_equalities": list(self.unexplained_equalities),
        }


def _alpha_key(alpha: float) -> str:
    return f"{alpha:g}"


def _evaluate(task: tuple[str, tuple[float, ...], float]) -> _GraphOutcome:
    """Worker: every bound check for one graph6 line. Module level so it pickles."""
    text, alphas, tol = task
    g = parse_graph6(text)
    if not is_connected(g):
        return _GraphOutcome(text, False, False, ())
    d = apsp(g)
    t = transmissions(d)
    if t.is_regular:
        return _GraphOutcome(text, True, True, ())
    graph_class = classify(g, t)
    checks = tuple(Validator.check_bound(g, a, tol, analyze_spectrum(g, a, d), graph_class) for a in alphas)
    return _GraphOutcome(text, True, False, checks)


def _load(lines: Iterable[str]) -> tuple[int | None, list[str]]:
    """Parses every line up front so errors surface before any work starts."""
    n = None
    texts = []
    try:
        for line_number, text, g in read_graph6(lines):
            if n is None:
                n = g.n
            elif g.n != n:
                raise SweepInputError(f"graph of order {g.n} in a sweep of order {n}", line_number)
            texts.append(text)
    except Graph6Error as e:
        raise SweepInputError(e.reason, e.line_number) from e
    return n, texts


def _reduce(report: SweepReport, outcomes: Iterable[_GraphOutcome]) -> SweepReport:
    alphas = report.alphas
    gaps: dict[float, list[tuple[float, str]]] = {a: [] for a in alphas}
    equal: dict[float, set[str]] = {a: set() for a in alphas}

    for outcome in outcomes:
        report.graphs_total += 1
        if not outcome.connected:
            continue
        report.graphs_connected += 1
        if outcome.transmission_regular:
            continue
        report.graphs_nontransmission_regular += 1
        for check in outcome.checks:
            report.rows.append(SweepRow(outcome.graph6, check))
            gaps[check.alpha].append((check.gap, outcome.graph6))
            finding = SweepFinding(outcome.graph6, check.alpha, check.gap, check.bound, check.slack, check.graph_class.label)
            if check.verdict == Verdict.VIOLATION:
                report.violations.append(finding)
            elif check.verdict == Verdict.EQUALITY_STRUCTURAL:
                equal[check.alpha].add(outcome.graph6)
                if not check.equality_consistent:
                    report.inconsistencies.append(finding)
            report.min_slack = check.slack if report.min_slack is None else min(report.min_slack, check.slack)
            report.min_slack_by_alpha[check.alpha] = min(report.min_slack_by_alpha.get(check.alpha, check.slack), check.slack)
        if outcome.checks and all(c.numeric_equality for c in outcome.checks) and not outcome.checks[0].graph_class.is_extremal:
            report.unexplained_equalities.append(outcome.graph6)

    for a in alphas:
        if not gaps[a]:
            continue
        lowest = min(gap for gap, _ in gaps[a])
        report.min_gap[a] = lowest
        report.argmin[a] = sorted({text for gap, text in gaps[a] if gap - lowest <= TIE_TOLERANCE})

    sets = [equal[a] for a in alphas]
    report.equality_set = sorted(set().union(*sets))
    report.equality_set_stable = all(s == sets[0] for s in sets)
    report.unexplained_equalities.sort()
    return report


@require(lambda alphas: len(alphas) > 0, "at least one alpha value is required", error=SweepInputError)
@require(lambda jobs: jobs is None or jobs >= 1, "jobs must be at least 1", error=SweepInputError)
def sweep(lines: Iterable[str], alphas: Sequence[float], tol: float = DEFAULT_TOLERANCE, jobs: int | None = 1) -> SweepReport:
    """
    Checks the gap bound on every graph of a graph6 stream.

    Disconnected and transmission-regular graphs are counted and skipped.
    Work is mapped over a process pool and reduced in input order, so the
    report does not depend on the number of workers.

    Args:
        lines (Iterable[str]): graph6 lines, one graph each, all of one order.
        alphas (Sequence[float]): alpha grid, every value in [0, 1).
        tol (float): Relative tolerance for violations and equality.
        jobs (int | None): Worker processes; None uses every core.

    Returns:
        SweepReport: Counters, minima, argmin and equality sets, findings.

    Raises:
        SweepInputError: For a parse failure (with its line number) or mixed orders.
        BoundDomainError: If an alpha equals 1.
    """
    grid = tuple(alpha_below_one(a).value for a in alphas)
    n, texts = _load(lines)
    workers = (os.cpu_count() or 1) if jobs is None else jobs
    logger.info("sweeping %d graphs of order %s over alphas %s with %d workers", len(texts), n, list(grid), workers)

    tasks = [(text, grid, tol) for text in texts]
    report = SweepReport(n=n, alphas=list(grid))
    if workers == 1 or len(tasks) < 2:
        _reduce(report, map(_evaluate, tasks))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            _reduce(report, pool.map(_evaluate, tasks, chunksize=max(1, len(tasks) // (4 * workers))))

    if report.no_eligible_graphs:
        logger.info("no eligible graphs: every graph was disconnected or transmission regular")
    else:
        logger.info(
            "swept %d eligible graphs: min slack %.6g, %d violations, equality set %s",
            report.graphs_nontransmission_regular, report.min_slack, len(report.violations), report.equality_set,
        )
    return report
