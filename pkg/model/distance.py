import numpy as np
from icontract import require, ensure, invariant

from model.graph import Graph, is_connected, iter_bits


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs finite distances but the graph is disconnected."""


@invariant(lambda self: bool(np.all(np.diag(self.d) == 0)), "diagonal must be zero")
@invariant(lambda self: bool(np.array_equal(self.d, self.d.T)), "distances must be symmetric")
class DistanceMatrix:
    """
    Shortest-path distances of a connected graph.

    Attributes:
        n (int): Order of the source graph.
        d (np.ndarray): n x n read-only integer matrix, d[i, j] = d(v_i, v_j).
        diameter (int): Largest entry of d.
    """

    @require(lambda d: d.ndim == 2 and d.shape[0] == d.shape[1], "distance matrix must be square")
    def __init__(self, d: np.ndarray):
        self._d = np.array(d, dtype=np.int64)
        self._d.flags.writeable = False
        self._diameter = int(self._d.max()) if self._d.size else 0

    @property
    def n(self) -> int:
        return self._d.shape[0]

    @property
    def d(self) -> np.ndarray:
        return self._d

    @property
    def diameter(self) -> int:
        return self._diameter

    def row(self, i: int) -> list[int]:
        return [int(x) for x in self._d[i]]

    def satisfies_triangle_inequality(self) -> bool:
        """Checks d[i, k] <= d[i, j] + d[j, k] for every triple."""
        d = self._d
        return bool(np.all(d[:, None, :] <= d[:, :, None] + d[None, :, :]))

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n}, diameter={self.diameter})"


@ensure(lambda g, result: result.n == g.n)
@ensure(
    lambda g, result: all((result.d[i, j] == 1) == g.adjacent(i, j) for i in range(g.n) for j in range(g.n) if i != j),
    "unit distance exactly on edges",
)
def apsp(g: Graph) -> DistanceMatrix:
    """
    All-pairs shortest paths by one breadth-first search per source vertex.

    Args:
        g (Graph): A connected graph.

    Returns:
        DistanceMatrix: Distances and diameter.

    Raises:
        DisconnectedGraphError: If some pair of vertices is not joined by a path.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected; distances are infinite")

    d = np.zeros((g.n, g.n), dtype=np.int64)
    for source in range(g.n):
        seen = frontier = 1 << source
        level = 0
        while frontier:
            level += 1
            reached = 0
            for v in iter_bits(frontier):
                reached |= g.rows[v]
            frontier = reached & ~seen
            seen |= frontier
            for v in iter_bits(frontier):
                d[source, v] = level
    return DistanceMatrix(d)
