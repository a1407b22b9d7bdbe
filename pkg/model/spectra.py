import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from icontract import require, ensure, invariant

from model.distance import DistanceMatrix, apsp
from model.graph import Graph

logger = logging.getLogger(__name__)

DELTA_TOLERANCE = 1e-13
RESIDUAL_TOLERANCE = 1e-11
MAX_POWER_ITERATIONS = 1_000_000
JACOBI_TOLERANCE = 1e-14
JACOBI_MAX_SWEEPS = 64


class SpectralError(ValueError):
    """Raised for malformed matrices or inconsistent spectral inputs."""


@invariant(lambda self: self.tr_min <= self.tr_max)
@invariant(lambda self: sum(self.tr) == 2 * self.wiener, "the transmissions must sum to twice the Wiener index")
@dataclass(frozen=True)
class TransmissionVector:
    """
    Vertex transmissions of a connected graph.

    Attributes:
        tr (tuple[int, ...]): Tr_i, the distance sum from vertex i.
        tr_max (int): Largest transmission.
        tr_min (int): Smallest transmission.
        wiener (int): Wiener index W = (1/2) sum Tr_i.
    """
    tr: tuple[int, ...]
    tr_max: int
    tr_min: int
    wiener: int

    @property
    def n(self) -> int:
        return len(self.tr)

    @property
    def is_regular(self) -> bool:
        """True for transmission-regular graphs."""
        return self.tr_max == self.tr_min

    @property
    def deficit(self) -> int:
        """n * Tr_max - 2W, the total shortfall of the transmissions below Tr_max."""
        return self.n * self.tr_max - 2 * self.wiener


@ensure(lambda d, result: list(result.tr) == [int(s) for s in d.d.sum(axis=1)])
def transmissions(d: DistanceMatrix) -> TransmissionVector:
    """
    Row sums of the distance matrix with their extremes and the Wiener index.

    Args:
        d (DistanceMatrix): Distances of a connected graph.

    Returns:
        TransmissionVector: Tr_i, Tr_max, Tr_min and W.
    """
    tr = tuple(int(s) for s in d.d.sum(axis=1))
    return TransmissionVector(tr=tr, tr_max=max(tr), tr_min=min(tr), wiener=sum(tr) // 2)


@invariant(lambda self: 0.0 <= self.value <= 1.0, "alpha must lie in [0, 1]")
@dataclass(frozen=True)
class AlphaParam:
    """
    Weight of the transmission diagonal in D_alpha.

    Attributes:
        value (float): alpha in [0, 1].
    """
    value: float

    @property
    def complement(self) -> float:
        """1 - alpha, the weight of the distance matrix."""
        return 1.0 - self.value

    @property
    def below_one(self) -> bool:
        return self.value < 1.0

    @staticmethod
    def coerce(a: "AlphaParam | float") -> "AlphaParam":
        if isinstance(a, AlphaParam):
            return a
        value = float(a)
        if not 0.0 <= value <= 1.0:
            raise SpectralError(f"alpha must lie in [0, 1], got {value}")
        return AlphaParam(value)


class SymmetricMatrix:
    """
    Read-only dense symmetric real matrix.

    Attributes:
        n (int): Order.
        entries (np.ndarray): n x n float array, not writeable.
    """

    def __init__(self, entries: np.ndarray):
        array = np.array(entries, dtype=float)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise SpectralError(f"matrix must be square, got shape {array.shape}")
        if array.shape[0] == 0:
            raise SpectralError("matrix has no rows")
        if not np.array_equal(array, array.T):
            raise SpectralError("matrix is not symmetric")
        array.flags.writeable = False
        self._entries = array

    @property
    def n(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def is_diagonal(self) -> bool:
        return not np.any(self._entries - np.diag(np.diag(self._entries)))

    def __repr__(self) -> str:
        return f"SymmetricMatrix(n={self.n})"


@ensure(lambda d, result: result.n == d.n)
def build_d_alpha(d: DistanceMatrix, t: TransmissionVector, a: AlphaParam | float) -> SymmetricMatrix:
    """
    D_alpha = alpha * Tr + (1 - alpha) * D.

    alpha = 0 gives D, alpha = 1 gives diag(Tr), and twice the alpha = 1/2
    matrix is the distance signless Laplacian Tr + D.

    Args:
        d (DistanceMatrix): Distances.
        t (TransmissionVector): Transmissions computed from the same distances.
        a (AlphaParam | float): alpha in [0, 1].

    Returns:
        SymmetricMatrix: The generalized distance matrix.

    Raises:
        SpectralError: If d and t describe different orders.
    """
    alpha = AlphaParam.coerce(a)
    if t.n != d.n:
        raise SpectralError(f"distance matrix has order {d.n} but {t.n} transmissions were given")
    entries = alpha.complement * d.d.astype(float)
    entries[np.diag_indices(d.n)] = alpha.value * np.asarray(t.tr, dtype=float)
    return SymmetricMatrix(entries)


class SolverPath(Enum):
    """Which route produced a SpectralResult."""
    POWER = "power"
    JACOBI = "jacobi"
    DIAGONAL = "diagonal"


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """
    Largest eigenvalue of a D_alpha matrix and its Perron vector.

    Attributes:
        mu (float): Spectral radius.
        perron (np.ndarray | None): Positive unit eigenvector; None for a diagonal
            matrix, where it is not unique.
        iterations (int): Power iterations (or Jacobi sweeps) used.
        residual (float): Infinity norm of M x - mu x.
        method (SolverPath): Route taken.
        spectrum (tuple[float, ...] | None): All eigenvalues, ascending, when the
            Jacobi solver ran. Diagnostic only.
    """
    mu: float
    perron: np.ndarray | None
    iterations: int
    residual: float
    method: SolverPath
    spectrum: tuple[float, ...] | None = field(default=None)

    @property
    def x_max(self) -> float | None:
        return None if self.perron is None else float(self.perron.max())

    @property
    def x_min(self) -> float | None:
        return None if self.perron is None else float(self.perron.min())

    @property
    def perron_ratio(self) -> float | None:
        """x_max / x_min."""
        return None if self.perron is None else self.x_max / self.x_min


@require(lambda tol, max_sweeps: tol > 0 and max_sweeps > 0)
def jacobi_eigh(
    matrix: SymmetricMatrix | np.ndarray, tol: float = JACOBI_TOLERANCE, max_sweeps: int = JACOBI_MAX_SWEEPS
) -> tuple[np.ndarray, np.ndarray, int]:
    """
    Cyclic Jacobi eigensolver for a dense symmetric matrix.

    Sweeps rotate every off-diagonal pair (p, q) in row order until the
    off-diagonal Frobenius norm drops below tol times the full norm.

    Args:
        matrix (SymmetricMatrix | np.ndarray): Symmetric input.
        tol (float): Relative off-diagonal threshold.
        max_sweeps (int): Sweep limit.

    Returns:
        tuple[np.ndarray, np.ndarray, int]: Eigenvalues ascending, eigenvectors
            as matching columns, and the number of sweeps performed.
    """
    source = matrix.entries if isinstance(matrix, SymmetricMatrix) else SymmetricMatrix(matrix).entries
    a = np.array(source, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    norm = max(float(np.linalg.norm(a)), 1.0)

    sweeps = 0
    while sweeps < max_sweeps:
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= tol * norm:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q

                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q

    if sweeps == max_sweeps:
        logger.warning("Jacobi stopped after %d sweeps without meeting tolerance %.1e", sweeps, tol)

    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order], sweeps


def _jacobi_result(m: SymmetricMatrix) -> SpectralResult:
    values, vectors, sweeps = jacobi_eigh(m)
    x = vectors[:, -1]
    if x.sum() < 0:
        x = -x
    x = x / np.linalg.norm(x)
    mu = float(values[-1])
    residual = float(np.max(np.abs(m.entries @ x - mu * x)))
    return SpectralResult(mu, x, sweeps, residual, SolverPath.JACOBI, tuple(float(w) for w in values))


@ensure(lambda result: result.perron is None or bool(np.all(result.perron > 0)), "Perron vector must be positive")
def spectral_radius(m: SymmetricMatrix, max_iterations: int = MAX_POWER_ITERATIONS) -> SpectralResult:
    """
    Largest eigenvalue and Perron vector of a nonnegative symmetric matrix.

    Power iteration runs on M + sigma*I with sigma the largest row sum, which
    makes mu + sigma strictly dominant in magnitude, from the all-ones vector.
    The Rayleigh quotient is accepted once successive estimates differ by at
    most 1e-13 * max(1, |mu|) and the residual is at most 1e-11 * max(1, |mu|).
    After max_iterations the cyclic Jacobi solver takes over.

    A diagonal matrix (D_1 = Tr) is answered directly with its largest entry
    and no Perron vector.

    Args:
        m (SymmetricMatrix): D_alpha of a connected graph.
        max_iterations (int): Power iteration budget before falling back.

    Returns:
        SpectralResult: mu, Perron vector and solver diagnostics.
    """
    a = m.entries
    if m.is_diagonal():
        return SpectralResult(float(np.max(np.diag(a))), None, 0, 0.0, SolverPath.DIAGONAL)

    n = m.n
    sigma = float(a.sum(axis=1).max())
    x = np.full(n, 1.0 / np.sqrt(n))
    ax = a @ x
    mu = float(x @ ax)
    for iteration in range(1, max_iterations + 1):
        y = ax + sigma * x
        x = y / np.linalg.norm(y)
        ax = a @ x
        estimate = float(x @ ax)
        residual = float(np.max(np.abs(ax - estimate * x)))
        delta = abs(estimate - mu)
        mu = estimate
        scale = max(1.0, abs(mu))
        if delta <= DELTA_TOLERANCE * scale and residual <= RESIDUAL_TOLERANCE * scale:
            logger.debug("power iteration converged: n=%d iterations=%d mu=%.15g", n, iteration, mu)
            return SpectralResult(mu, x, iteration, residual, SolverPath.POWER)

    logger.warning("power iteration did not converge in %d iterations (n=%d); using Jacobi", max_iterations, n)
    return _jacobi_result(m)


@dataclass(frozen=True, eq=False)
class SpectrumAnalysis:
    """
    Everything computed on the way from a graph to mu_alpha.

    Attributes:
        alpha (AlphaParam): Weight used.
        distances (DistanceMatrix): Shortest-path distances.
        transmissions (TransmissionVector): Row sums of the distances.
        spectral (SpectralResult): Spectral radius of D_alpha.
    """
    alpha: AlphaParam
    distances: DistanceMatrix
    transmissions: TransmissionVector
    spectral: SpectralResult

    @property
    def gap(self) -> float:
        """Tr_max - mu_alpha."""
        return self.transmissions.tr_max - self.spectral.mu


def analyze_spectrum(
    g: Graph, a: AlphaParam | float, distances: DistanceMatrix | None = None
) -> SpectrumAnalysis:
    """
    Runs apsp, transmissions, D_alpha assembly and the eigensolver.

    Args:
        g (Graph): Connected graph.
        a (AlphaParam | float): alpha in [0, 1].
        distances (DistanceMatrix | None): Reuse precomputed distances.

    Returns:
        SpectrumAnalysis: All intermediate results.

    Raises:
        DisconnectedGraphError: If g is disconnected.
    """
    alpha = AlphaParam.coerce(a)
    d = apsp(g) if distances is None else distances
    t = transmissions(d)
    return SpectrumAnalysis(alpha, d, t, spectral_radius(build_d_alpha(d, t, alpha)))


def distance_signless_laplacian_radius(g: Graph) -> float:
    """mu_Q(G), the largest eigenvalue of Tr + D, as 2 * mu_{1/2}(G)."""
    return 2.0 * analyze_spectrum(g, 0.5).spectral.mu
