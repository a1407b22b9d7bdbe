from collections.abc import Sequence
from dataclasses import dataclass

from model.classifier import GraphClass, classify
from model.distance import DisconnectedGraphError, apsp
from model.graph import Graph, degree_sequence, is_connected
from model.graph6 import to_graph6
from model.spectra import AlphaParam, TransmissionVector, analyze_spectrum, transmissions
from model.validator import DEFAULT_TOLERANCE, BoundCheck, Validator
from shared.utility import Utility


@dataclass(frozen=True)
class AlphaRow:
    """
    Spectral data of one graph at one alpha, with the bound check when it applies.

    Attributes:
        alpha (float): alpha in [0, 1].
        mu (float): mu_alpha.
        x_max (float | None): Largest Perron entry.
        x_min (float | None): Smallest Perron entry.
        gap (float): Tr_max - mu_alpha.
        check (BoundCheck | None): None when the bound does not apply.
        note (str): Why the check was skipped.
    """
    alpha: float
    mu: float
    x_max: float | None
    x_min: float | None
    gap: float
    check: BoundCheck | None = None
    note: str = ""

    def to_dict(self) -> dict:
        check = self.check
        return {
            "alpha": Utility.significant(self.alpha),
            "mu_alpha": Utility.significant(self.mu),
            "x_max": Utility.significant(self.x_max),
            "x_min": Utility.significant(self.x_min),
            "gap": Utility.significant(self.gap),
            "bound": None if check is None else Utility.significant(check.bound),
            "slack": None if check is None else Utility.significant(check.slack),
            "verdict": None if check is None else check.verdict.value,
            "note": self.note,
        }


@dataclass(frozen=True)
class GraphAnalysis:
    """
    Everything the analyze command reports for one graph.

    Attributes:
        graph6 (str): Encoding of the graph.
        n (int): Order.
        degrees (tuple[int, ...]): Degree sequence by vertex.
        diameter (int): Largest distance.
        transmissions (TransmissionVector): Tr_i, Tr_max, Tr_min, W.
        graph_class (GraphClass): Structural class.
        rows (tuple[AlphaRow, ...]): One row per alpha.
    """
    graph6: str
    n: int
    degrees: tuple[int, ...]
    diameter: int
    transmissions: TransmissionVector
    graph_class: GraphClass
    rows: tuple[AlphaRow, ...]

    def to_dict(self) -> dict:
        t = self.transmissions
        return {
            "graph6": self.graph6,
            "n": self.n,
            "degrees": list(self.degrees),
            "diameter": self.diameter,
            "transmissions": list(t.tr),
            "tr_max": t.tr_max,
            "tr_min": t.tr_min,
            "wiener": t.wiener,
            "class": self.graph_class.label,
            "alphas": [row.to_dict() for row in self.rows],
        }


def analyze_graph(g: Graph, alphas: Sequence[float], tol: float = DEFAULT_TOLERANCE, graph6: str | None = None) -> GraphAnalysis:
    """
    Distances, transmissions, class and per-alpha spectra of one graph.

    The bound is checked at every alpha below 1 for graphs that are not
    transmission regular; other rows carry a note instead.

    Args:
        g (Graph): Connected graph.
        alphas (Sequence[float]): alpha values in [0, 1].
        tol (float): Relative tolerance for the bound check.
        graph6 (str | None): Encoding to report; computed when omitted.

    Returns:
        GraphAnalysis: The full report.

    Raises:
        DisconnectedGraphError: If g is disconnected.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")
    d = apsp(g)
    t = transmissions(d)
    graph_class = classify(g, t)
    rows = []
    for a in alphas:
        alpha = AlphaParam.coerce(a)
        analysis = analyze_spectrum(g, alpha, d)
        spectral = analysis.spectral
        if t.is_regular:
            check, note = None, "transmission regular: bound check skipped"
        elif not alpha.below_one:
            check, note = None, "alpha = 1: bound check skipped"
        else:
            check, note = Validator.check_bound(g, alpha, tol, analysis, graph_class), ""
        rows.append(AlphaRow(alpha.value, spectral.mu, spectral.x_max, spectral.x_min, analysis.gap, check, note))
    return GraphAnalysis(
        graph6=to_graph6(g) if graph6 is None else graph6,
        n=g.n,
        degrees=tuple(degree_sequence(g)),
        diameter=d.diameter,
        transmissions=t,
        graph_class=graph_class,
        rows=tuple(rows),
    )
