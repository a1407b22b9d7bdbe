import math
from dataclasses import dataclass

import numpy as np
from icontract import require, ensure, invariant

from model.graph import Graph
from model.spectra import AlphaParam, analyze_spectrum

EQ5_TOLERANCE = 1e-12


class BoundDomainError(ValueError):
    """Raised when a closed form is evaluated outside its domain (alpha = 1, wrong parity, n too small)."""


def alpha_below_one(a: AlphaParam | float) -> AlphaParam:
    alpha = AlphaParam.coerce(a)
    if not alpha.below_one:
        raise BoundDomainError("alpha must be < 1: the bound divides by 1 - alpha")
    return alpha


def rho(n: int) -> int:
    """1 for odd n, 2 for even n."""
    return 1 if n % 2 else 2


@invariant(lambda self: self.rho_n == rho(self.n))
@invariant(lambda self: 0.0 < self.tau_n < 1.0, "tau_n must lie strictly between 0 and 1")
@dataclass(frozen=True)
class BoundParams:
    """
    The lower bound (1 - alpha) * tau_n for order n.

    Attributes:
        n (int): Order.
        alpha (float): alpha in [0, 1).
        rho_n (int): 1 for odd n, 2 for even n.
        tau_n (float): Smaller root of (1-a) t^2 - [(1-a) n + rho] t + rho = 0.
        bound (float): (1 - alpha) * tau_n.
    """
    n: int
    alpha: float
    rho_n: int
    tau_n: float
    bound: float

    @property
    def quadratic_residual(self) -> float:
        """Left-hand side of the tau_n quadratic evaluated at tau_n."""
        c = 1.0 - self.alpha
        return c * self.tau_n ** 2 - (c * self.n + self.rho_n) * self.tau_n + self.rho_n

    @property
    def perron_ratio(self) -> float:
        """1 / (1 - tau_n), the x_max / x_min ratio forced on extremal graphs."""
        return 1.0 / (1.0 - self.tau_n)


def _smaller_root_gap(n: int, c: float, r: int) -> float:
    """
    ((c n + r) - sqrt((c n + r)^2 - 4 r c)) / 2, computed as 2 r c / ((c n + r) + sqrt(...)).
    """
    s = c * n + r
    return 2.0 * r * c / (s + math.sqrt(s * s - 4.0 * r * c))


@ensure(lambda result: abs(result.quadratic_residual) <= EQ5_TOLERANCE, "tau_n must solve its quadratic")
def bound_tau(n: int, a: AlphaParam | float) -> BoundParams:
    """
    Lower bound on Tr_max - mu_alpha for non-transmission-regular graphs of order n.

    (1-a) tau_n = ((1-a) n + rho_n - sqrt(((1-a) n + rho_n)^2 - 4 rho_n (1-a))) / 2
    with rho_n = 1 for odd n and 2 for even n.

    Args:
        n (int): Order; at least 3 when odd, at least 4 when even.
        a (AlphaParam | float): alpha in [0, 1).

    Returns:
        BoundParams: rho_n, tau_n and the bound.

    Raises:
        BoundDomainError: For alpha = 1 or n too small.
    """
    alpha = alpha_below_one(a)
    if n < 3 or (n % 2 == 0 and n < 4):
        raise BoundDomainError(f"the bound needs n >= 3 (odd) or n >= 4 (even), got n = {n}")
    c = alpha.complement
    r = rho(n)
    bound = _smaller_root_gap(n, c, r)
    return BoundParams(n=n, alpha=alpha.value, rho_n=r, tau_n=bound / c, bound=bound)


@require(lambda n: n >= 3 and n % 2 == 1, "n must be odd and >= 3", error=BoundDomainError)
def quotient_matrix_odd(n: int, a: AlphaParam | float) -> np.ndarray:
    """
    Equitable quotient of D_alpha(K_{1,2,...,2}) for the partition {hub} | rest.

    [[a(n-1), (1-a)(n-1)], [1-a, a n + (1-a)(n-1)]]
    """
    alpha = AlphaParam.coerce(a).value
    return np.array([[alpha * (n - 1), (1 - alpha) * (n - 1)], [1 - alpha, alpha * n + (1 - alpha) * (n - 1)]])


@require(lambda n: n >= 4 and n % 2 == 0, "n must be even and >= 4", error=BoundDomainError)
def quotient_matrix_even_dvdr(n: int, a: AlphaParam | float) -> np.ndarray:
    """
    Equitable quotient of D_alpha(G) for an (n-4)-DVDR graph G and the partition {hub} | rest.

    [[a(n-1), (1-a)(n-1)], [1-a, a(n+1) + (1-a) n]]
    """
    alpha = AlphaParam.coerce(a).value
    return np.array([[alpha * (n - 1), (1 - alpha) * (n - 1)], [1 - alpha, alpha * (n + 1) + (1 - alpha) * n]])


@require(lambda n: isinstance(n, int) and n >= 3 and n % 2 == 1, "n must be odd and >= 3", error=BoundDomainError)
def quotient_mu_odd(n: int, a: AlphaParam | float) -> float:
    """
    Closed-form mu_alpha of K_{1,2,...,2} of odd order n.

    ((1+a) n - 1 + sqrt(((1-a) n + 1)^2 - 4(1-a))) / 2

    Raises:
        BoundDomainError: For even n or alpha = 1.
    """
    alpha = alpha_below_one(a)
    c = alpha.complement
    return ((1 + alpha.value) * n - 1 + math.sqrt((c * n + 1) ** 2 - 4 * c)) / 2


@require(lambda n: isinstance(n, int) and n >= 4 and n % 2 == 0, "n must be even and >= 4", error=BoundDomainError)
def quotient_mu_even_dvdr(n: int, a: AlphaParam | float) -> float:
    """
    Closed-form mu_alpha of any (n-4)-DVDR graph of even order n.

    ((1+a) n + sqrt(((1-a) n + 2)^2 - 8(1-a))) / 2

    Raises:
        BoundDomainError: For odd n or alpha = 1.
    """
    alpha = alpha_below_one(a)
    c = alpha.complement
    return ((1 + alpha.value) * n + math.sqrt((c * n + 2) ** 2 - 8 * c)) / 2


def gap(g: Graph, a: AlphaParam | float) -> float:
    """
    Tr_max - mu_alpha(g).

    Zero (up to solver tolerance) exactly for transmission-regular graphs.

    Args:
        g (Graph): Connected graph with n >= 2.
        a (AlphaParam | float): alpha in [0, 1].

    Returns:
        float: The gap.

    Raises:
        DisconnectedGraphError: If g is disconnected.
    """
    return analyze_spectrum(g, a).gap
