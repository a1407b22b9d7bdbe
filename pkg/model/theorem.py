import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from model.bounds import EQ5_TOLERANCE, bound_tau, quotient_matrix_even_dvdr, quotient_matrix_odd, quotient_mu_even_dvdr, quotient_mu_odd
from model.classifier import classify
from model.family import cycle_partitions, extremal_family
from model.graph6 import parse_graph6, to_graph6
from model.quotient import equitable_quotient
from model.spectra import analyze_spectrum, build_d_alpha
from model.sweep import SweepReport
from model.validator import DEFAULT_TOLERANCE, Validator, Verdict
from shared.utility import Utility

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TheoremCheck:
    """
    One pass/fail item of the theorem acceptance run.

    Attributes:
        name (str): Check identifier.
        passed (bool): Outcome.
        detail (str): Measured values or the reason for failure.
        graph6 (str | None): Offending or inspected graph.
        alpha (float | None): alpha the check ran at.
    """
    name: str
    passed: bool
    detail: str = ""
    graph6: str | None = None
    alpha: float | None = None

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "graph6": self.graph6,
            "alpha": Utility.significant(self.alpha),
            "detail": self.detail,
        }


@dataclass
class TheoremReport:
    """
    Result of verifying the bound and its equality cases for one order.

    Attributes:
        n (int): Order.
        alphas (list[float]): alpha grid.
        family (list[str]): graph6 of the generated extremal graphs.
        checks (list[TheoremCheck]): Every check in the order it ran.
        sweep (SweepReport | None): Exhaustive sweep, in file mode.
    """
    n: int
    alphas: list[float]
    family: list[str]
    checks: list[TheoremCheck] = field(default_factory=list)
    sweep: SweepReport | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[TheoremCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alphas": [Utility.significant(a) for a in self.alphas],
            "passed": self.passed,
            "family": list(self.family),
            "checks": [c.to_dict() for c in self.checks],
            "sweep": None if self.sweep is None else self.sweep.to_dict(),
        }


def _close(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(b))


def verify_family(n: int, alphas: Sequence[float], tol: float = DEFAULT_TOLERANCE) -> TheoremReport:
    """
    Checks the closed-form side of the theorem on the extremal family of order n.

    Per alpha: the tau_n quadratic residual; per extremal graph and alpha:
    structural equality attained within tol, mu_alpha equal to the closed
    form, the {hub} | rest quotient equitable and equal to the 2 x 2 closed-form
    matrix with the same spectral radius, and every proof claim passing.

    Args:
        n (int): Order, at least 3.
        alphas (Sequence[float]): alpha values in [0, 1).
        tol (float): Relative tolerance.

    Returns:
        TheoremReport: Checks for the family; no sweep.

    Raises:
        FamilyError: If n < 3.
        BoundDomainError: If an alpha equals 1.
    """
    family = extremal_family(n)
    report = TheoremReport(n, list(alphas), [to_graph6(g) for g in family])
    odd = n % 2 == 1

    for a in alphas:
        params = bound_tau(n, a)
        report.checks.append(TheoremCheck(
            "tau_quadratic",
            abs(params.quadratic_residual) <= EQ5_TOLERANCE and 0.0 < params.tau_n < 1.0,
            f"tau_n={params.tau_n:.15g} residual={params.quadratic_residual:.3e}",
            alpha=a,
        ))

    for g, text in zip(family, report.family):
        graph_class = classify(g)
        report.checks.append(TheoremCheck(
            "extremal_class", graph_class.is_extremal, graph_class.label, graph6=text
        ))
        for a in alphas:
            analysis = analyze_spectrum(g, a)
            check = Validator.check_bound(g, a, tol, analysis, graph_class)
            report.checks.append(TheoremCheck(
                "equality_attained",
                check.verdict == Verdict.EQUALITY_STRUCTURAL and check.numeric_equality,
                f"gap={check.gap:.15g} bound={check.bound:.15g} slack={check.slack:.3e}",
                text, a,
            ))

            closed_form = quotient_mu_odd(n, a) if odd else quotient_mu_even_dvdr(n, a)
            report.checks.append(TheoremCheck(
                "closed_form_mu",
                _close(analysis.spectral.mu, closed_form, tol),
                f"mu={analysis.spectral.mu:.15g} closed form={closed_form:.15g}",
                text, a,
            ))

            hub = graph_class.hub if graph_class.hub is not None else 0
            m = build_d_alpha(analysis.distances, analysis.transmissions, a)
            quotient = equitable_quotient(m, [[hub], [v for v in range(n) if v != hub]])
            expected = quotient_matrix_odd(n, a) if odd else quotient_matrix_even_dvdr(n, a)
            report.checks.append(TheoremCheck(
                "equitable_quotient",
                quotient.equitable and bool(np.allclose(quotient.b, expected, rtol=0.0, atol=tol))
                and _close(quotient.spectral_radius(), analysis.spectral.mu, tol),
                f"B={quotient.b.tolist()} rho(B)={quotient.spectral_radius():.15g}",
                text, a,
            ))

            invariants = Validator.check_proof_invariants(g, a)
            report.checks.append(TheoremCheck(
                "proof_claims",
                invariants.passed,
                ", ".join(f"{c.name}:{c.status.value}" for c in invariants.claims),
                text, a,
            ))
    return report


def verify_sweep(report: TheoremReport, swept: SweepReport) -> TheoremReport:
    """
    Adds the exhaustive checks from a sweep over every connected graph of order n.

    No violations; the equality set is stable across alphas, every member is
    extremal, and it matches the generated family (one graph for odd n, one
    graph per cycle partition of n - 1 for even n); the minimum gap is attained
    inside the equality set; no numeric equality goes unexplained.
    """
    report.sweep = swept
    checks = report.checks
    checks.append(TheoremCheck("no_violations", not swept.violations, f"{len(swept.violations)} violations"))
    for finding in swept.violations:
        checks.append(TheoremCheck("violation", False, f"slack={finding.slack:.3e}", finding.graph6, finding.alpha))
    checks.append(TheoremCheck("equality_consistent", not swept.inconsistencies, f"{len(swept.inconsistencies)} inconsistent"))
    checks.append(TheoremCheck("equality_set_stable", swept.equality_set_stable, f"equality set {swept.equality_set}"))

    classes = [classify(parse_graph6(text)) for text in swept.equality_set]
    for text, graph_class in zip(swept.equality_set, classes):
        checks.append(TheoremCheck("equality_member_extremal", graph_class.is_extremal, graph_class.label, text))

    if report.n % 2:
        family_ok = len(swept.equality_set) == 1
        detail = f"{len(swept.equality_set)} equality graphs, expected 1"
    else:
        found = sorted(c.cycle_lengths for c in classes if c.cycle_lengths is not None)
        expected = sorted(cycle_partitions(report.n - 1))
        family_ok = found == expected and len(classes) == len(expected)
        detail = f"cycle structures {found}, expected {expected}"
    checks.append(TheoremCheck("equality_set_is_family", family_ok, detail))

    members = set(swept.equality_set)
    for a, argmin in swept.argmin.items():
        checks.append(TheoremCheck(
            "argmin_in_equality_set", set(argmin) <= members, f"argmin {argmin}", alpha=a
        ))
    checks.append(TheoremCheck(
        "no_unexplained_equalities", not swept.unexplained_equalities, f"unexplained {swept.unexplained_equalities}"
    ))
    logger.info("theorem checks for n=%d: %d run, %d failed", report.n, len(checks), len(report.failures))
    return report
