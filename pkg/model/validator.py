import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np
from icontract import require, ensure

from model.bounds import BoundParams, alpha_below_one, bound_tau, rho
from model.classifier import GraphClass, classify
from model.graph import Graph, degree_sequence
from model.spectra import AlphaParam, SpectrumAnalysis, analyze_spectrum

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9
PERRON_RATIO_TOLERANCE = 1e-8
CERTIFICATE_TOLERANCE = 1e-9


class TheoremHypothesisError(ValueError):
    """Raised when a graph falls outside the bound's hypothesis (it is transmission regular)."""


class Verdict(Enum):
    HOLDS = "Holds"
    EQUALITY_STRUCTURAL = "EqualityStructural"
    VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class BoundCheck:
    """
    Outcome of comparing Tr_max - mu_alpha with (1 - alpha) tau_n for one graph.

    Attributes:
        n (int): Order.
        alpha (float): alpha in [0, 1).
        tr_max (int): Largest transmission.
        mu (float): mu_alpha.
        gap (float): tr_max - mu.
        bound (float): (1 - alpha) tau_n.
        slack (float): gap - bound.
        tolerance (float): Absolute tolerance tol * max(1, bound).
        verdict (Verdict): Holds, EqualityStructural or VIOLATION.
        graph_class (GraphClass): Structural class that decided equality.
        x_max (float | None): Largest Perron entry.
        x_min (float | None): Smallest Perron entry.
    """
    n: int
    alpha: float
    tr_max: int
    mu: float
    gap: float
    bound: float
    slack: float
    tolerance: float
    verdict: Verdict
    graph_class: GraphClass
    x_max: float | None = None
    x_min: float | None = None

    @property
    def numeric_equality(self) -> bool:
        """|slack| within tolerance."""
        return abs(self.slack) <= self.tolerance

    @property
    def equality_consistent(self) -> bool:
        """False only when a structurally extremal graph misses the bound numerically."""
        return self.verdict != Verdict.EQUALITY_STRUCTURAL or self.numeric_equality


class ClaimStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class ClaimCheck:
    """
    One numeric invariant with what was measured and what was expected.

    Attributes:
        name (str): Claim identifier, e.g. "sandwich".
        status (ClaimStatus): Pass, fail, or skipped when the claim does not apply.
        measured (float | None): Measured quantity.
        expected (float | None): Reference value or limit.
        deviation (float | None): Absolute deviation from the claim (0 when satisfied exactly).
        detail (str): Short explanation.
    """
    name: str
    status: ClaimStatus
    measured: float | None = None
    expected: float | None = None
    deviation: float | None = None
    detail: str = ""


@dataclass(frozen=True)
class InvariantReport:
    """
    All claim checks for one graph at one alpha.

    Attributes:
        n (int): Order.
        alpha (float): alpha in [0, 1).
        graph_class (GraphClass): Structural class.
        claims (tuple[ClaimCheck, ...]): Checks in a fixed order.
    """
    n: int
    alpha: float
    graph_class: GraphClass
    claims: tuple[ClaimCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.status != ClaimStatus.FAIL for c in self.claims)

    @property
    def failures(self) -> list[ClaimCheck]:
        return [c for c in self.claims if c.status == ClaimStatus.FAIL]

    def claim(self, name: str) -> ClaimCheck:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(name)


def _status(ok: bool) -> ClaimStatus:
    return ClaimStatus.PASS if ok else ClaimStatus.FAIL


def _skipped(name: str, reason: str) -> ClaimCheck:
    return ClaimCheck(name, ClaimStatus.SKIPPED, detail=reason)


class Validator:
    """Checks the transmission gap bound and the numeric claims behind it."""

    @staticmethod
    @require(lambda tol: tol > 0, "tolerance must be positive", error=ValueError)
    @ensure(lambda result: (result.verdict == Verdict.VIOLATION) == (result.slack < -result.tolerance))
    def check_bound(g: Graph, a: AlphaParam | float, tol: float = DEFAULT_TOLERANCE,
                    analysis: SpectrumAnalysis | None = None, graph_class: GraphClass | None = None) -> BoundCheck:
        """
        Compares the gap of g with the lower bound for its order.

        Equality is decided by the structural class; the numeric slack only
        corroborates it (see BoundCheck.equality_consistent).

        Args:
            g (Graph): Connected, non-transmission-regular graph.
            a (AlphaParam | float): alpha in [0, 1).
            tol (float): Relative tolerance; the absolute one is tol * max(1, bound).
            analysis (SpectrumAnalysis | None): Precomputed spectrum of g at a.
            graph_class (GraphClass | None): Precomputed class of g; it does not depend on alpha.

        Returns:
            BoundCheck: Gap, bound, slack and verdict.

        Raises:
            BoundDomainError: For alpha = 1.
            TheoremHypothesisError: For transmission-regular graphs.
            DisconnectedGraphError: For disconnected graphs.
        """
        alpha = alpha_below_one(a)
        analysis = analyze_spectrum(g, alpha) if analysis is None else analysis
        t = analysis.transmissions
        if t.is_regular:
            raise TheoremHypothesisError(
                f"graph is transmission regular (every Tr_i = {t.tr_max}); the bound applies to non-transmission-regular graphs"
            )
        params = bound_tau(g.n, alpha)
        graph_class = classify(g, t) if graph_class is None else graph_class
        slack = analysis.gap - params.bound
        tolerance = tol * max(1.0, params.bound)

        if slack < -tolerance:
            verdict = Verdict.VIOLATION
            logger.error("bound violated: n=%d alpha=%s gap=%.15g bound=%.15g", g.n, alpha.value, analysis.gap, params.bound)
        elif graph_class.is_extremal:
            verdict = Verdict.EQUALITY_STRUCTURAL
            if abs(slack) > tolerance:
                logger.warning("extremal graph misses equality: n=%d alpha=%s slack=%.3e", g.n, alpha.value, slack)
        else:
            verdict = Verdict.HOLDS

        spectral = analysis.spectral
        return BoundCheck(
            n=g.n,
            alpha=alpha.value,
            tr_max=t.tr_max,
            mu=spectral.mu,
            gap=analysis.gap,
            bound=params.bound,
            slack=slack,
            tolerance=tolerance,
            verdict=verdict,
            graph_class=graph_class,
            x_max=spectral.x_max,
            x_min=spectral.x_min,
        )

    @staticmethod
    def check_proof_invariants(g: Graph, a: AlphaParam | float) -> InvariantReport:
        """
        Runs the numeric claims behind the bound on one graph.

        Always checked: the sandwich Tr_min <= mu <= Tr_max, the transmission
        balance, the Perron extremes and the Perron gap certificate (the last
        three need a Perron vector). Graphs of diameter at most 2 also check
        Tr_y = d(y) + 2(n - 1 - d(y)). Extremal graphs additionally check the
        parity identity n Tr_max - 2W = rho_n, the Perron ratio 1 / (1 - tau_n),
        Tr_min = n - 1 with Tr_max = n - 1 + rho_n, and the non-hub degrees.
        Claims that do not apply are reported as skipped.

        Args:
            g (Graph): Connected graph.
            a (AlphaParam | float): alpha in [0, 1).

        Returns:
            InvariantReport: One ClaimCheck per claim.
        """
        alpha = alpha_below_one(a)
        analysis = analyze_spectrum(g, alpha)
        graph_class = classify(g, analysis.transmissions)
        params = bound_tau(g.n, alpha) if g.n >= 3 else None

        claims = [
            _sandwich(analysis),
            _diam2_identity(g, analysis),
            _transmission_balance(analysis),
            _perron_extremes(analysis),
            _perron_gap_certificate(analysis),
        ]
        if graph_class.is_extremal and params is not None:
            claims += [
                _parity_identity(g, analysis),
                _perron_ratio(analysis, params),
                _trmax_structure(g, analysis),
                _hub_degrees(g, graph_class),
            ]
        else:
            reason = f"applies to extremal graphs only ({graph_class.label})"
            claims += [_skipped(name, reason) for name in ("parity_identity", "perron_ratio", "trmax_structure", "hub_degrees")]

        report = InvariantReport(g.n, alpha.value, graph_class, tuple(claims))
        for failure in report.failures:
            logger.warning("claim %s failed: measured=%s expected=%s", failure.name, failure.measured, failure.expected)
        return report


def _sandwich(s: SpectrumAnalysis) -> ClaimCheck:
    t, mu = s.transmissions, s.spectral.mu
    deviation = max(0.0, t.tr_min - mu, mu - t.tr_max)
    ok = deviation <= CERTIFICATE_TOLERANCE * max(1.0, t.tr_max)
    return ClaimCheck("sandwich", _status(ok), mu, float(t.tr_max), deviation, f"Tr_min={t.tr_min} Tr_max={t.tr_max}")


def _diam2_identity(g: Graph, s: SpectrumAnalysis) -> ClaimCheck:
    if s.distances.diameter > 2:
        return _skipped("diam2_identity", f"diameter {s.distances.diameter} > 2")
    degrees = degree_sequence(g)
    predicted = [d + 2 * (g.n - 1 - d) for d in degrees]
    deviation = max(abs(tr - p) for tr, p in zip(s.transmissions.tr, predicted))
    return ClaimCheck("diam2_identity", _status(deviation == 0), deviation=float(deviation))


def _transmission_balance(s: SpectrumAnalysis) -> ClaimCheck:
    x = s.spectral.perron
    if x is None:
        return _skipped("transmission_balance", "no Perron vector")
    tr = np.asarray(s.transmissions.tr, dtype=float)
    lhs = s.gap * float(x.sum())
    rhs = float(((s.transmissions.tr_max - tr) * x).sum())
    deviation = abs(lhs - rhs)
    ok = deviation <= CERTIFICATE_TOLERANCE * max(1.0, abs(rhs), float(tr.max()))
    return ClaimCheck("transmission_balance", _status(ok), lhs, rhs, deviation)


def _perron_extremes(s: SpectrumAnalysis) -> ClaimCheck:
    x = s.spectral.perron
    if x is None:
        return _skipped("perron_extremes", "no Perron vector")
    u, v = int(np.argmax(x)), int(np.argmin(x))
    tr, mu = s.transmissions.tr, s.spectral.mu
    deviation = max(0.0, tr[v] - mu, mu - tr[u])
    ok = deviation <= CERTIFICATE_TOLERANCE * max(1.0, mu)
    return ClaimCheck("perron_extremes", _status(ok), mu, None, deviation, f"Tr_v={tr[v]} Tr_u={tr[u]} (u={u}, v={v})")


def _perron_gap_certificate(s: SpectrumAnalysis) -> ClaimCheck:
    x = s.spectral.perron
    if x is None:
        return _skipped("perron_gap_certificate", "no Perron vector")
    u, v = int(np.argmax(x)), int(np.argmin(x))
    certificate = s.alpha.complement * int(s.distances.d[u, v]) * (1.0 - float(x[v] / x[u]))
    deviation = max(0.0, certificate - s.gap)
    ok = deviation <= CERTIFICATE_TOLERANCE * max(1.0, s.transmissions.tr_max)
    return ClaimCheck("perron_gap_certificate", _status(ok), s.gap, certificate, deviation)


def _parity_identity(g: Graph, s: SpectrumAnalysis) -> ClaimCheck:
    measured = s.transmissions.deficit
    expected = rho(g.n)
    return ClaimCheck("parity_identity", _status(measured == expected), float(measured), float(expected),
                      float(abs(measured - expected)))


def _perron_ratio(s: SpectrumAnalysis, params: BoundParams) -> ClaimCheck:
    measured = s.spectral.perron_ratio
    if measured is None:
        return _skipped("perron_ratio", "no Perron vector")
    expected = params.perron_ratio
    deviation = abs(measured - expected)
    ok = deviation <= PERRON_RATIO_TOLERANCE * max(1.0, expected)
    return ClaimCheck("perron_ratio", _status(ok), measured, expected, deviation)


def _trmax_structure(g: Graph, s: SpectrumAnalysis) -> ClaimCheck:
    t = s.transmissions
    deviation = abs(t.tr_min - (g.n - 1)) + abs(t.tr_max - (g.n - 1 + rho(g.n)))
    return ClaimCheck("trmax_structure", _status(deviation == 0), float(t.tr_max), float(g.n - 1 + rho(g.n)),
                      float(deviation), f"Tr_min={t.tr_min} expected {g.n - 1}")


def _hub_degrees(g: Graph, graph_class: GraphClass) -> ClaimCheck:
    expected = g.n - 1 - rho(g.n)
    others = [d for v, d in enumerate(degree_sequence(g)) if v != graph_class.hub]
    deviation = max(abs(d - expected) for d in others)
    return ClaimCheck("hub_degrees", _status(deviation == 0), float(min(others)), float(expected), float(deviation))
