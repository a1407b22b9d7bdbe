from collections.abc import Iterable, Iterator, Sequence
from icontract import require, ensure

import numpy as np

MAX_ORDER = 62


class GraphError(ValueError):
    """Raised when a graph cannot be built from the given vertices and edges."""


class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    Adjacency is stored as one bitmask per vertex, so n is capped at 62 (the
    largest order a single graph6 size byte can describe). Instances are
    immutable once built; use the module-level constructors.

    Attributes:
        n (int): Number of vertices.
        rows (tuple[int, ...]): rows[i] has bit j set iff i~j.
    """

    __slots__ = ("_n", "_rows")

    @require(lambda n: isinstance(n, int) and 0 <= n <= MAX_ORDER, "n must be an integer in [0, 62]", error=GraphError)
    @require(lambda n, rows: len(rows) == n, "one adjacency row per vertex is required", error=GraphError)
    @require(lambda rows: all((row >> i) & 1 == 0 for i, row in enumerate(rows)), "self loops are not allowed", error=GraphError)
    @require(
        lambda rows: all(((rows[j] >> i) & 1) == ((row >> j) & 1) for i, row in enumerate(rows) for j in range(len(rows))),
        "adjacency must be symmetric",
        error=GraphError,
    )
    def __init__(self, n: int, rows: Sequence[int]):
        """
        Wraps already validated adjacency rows.

        Args:
            n (int): Number of vertices.
            rows (Sequence[int]): Bitmask of neighbours for each vertex.
        """
        self._n = n
        self._rows = tuple(rows)

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def edge_count(self) -> int:
        """Number of adjacent pairs (m)."""
        return sum(row.bit_count() for row in self._rows) // 2

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self._rows[i] >> j) & 1)

    def neighbors(self, i: int) -> tuple[int, ...]:
        """Neighbours of vertex i in increasing label order."""
        row = self._rows[i]
        return tuple(j for j in range(self._n) if (row >> j) & 1)

    def degree(self, i: int) -> int:
        return self._rows[i].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yields every edge once as (i, j) with i < j."""
        for i, row in enumerate(self._rows):
            for j in range(i + 1, self._n):
                if (row >> j) & 1:
                    yield i, j

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix."""
        matrix = np.zeros((self._n, self._n), dtype=np.int64)
        for i, j in self.edges():
            matrix[i, j] = matrix[j, i] = 1
        return matrix

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self.edges())})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """
    Builds a graph from an edge list; duplicate pairs collapse.

    Args:
        n (int): Number of vertices (1..62).
        edges (Iterable[tuple[int, int]]): Vertex pairs.

    Returns:
        Graph: Graph with exactly the listed adjacencies.

    Raises:
        GraphError: If an endpoint is out of range, an edge is a loop, or n is unsupported.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order must be between 1 and {MAX_ORDER}, got {n!r}")

    rows = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
        if i == j:
            raise GraphError(f"self loop at vertex {i}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return graph_from_edges(n, [])


@ensure(lambda g, result: result is True or g.n > 1)
def is_connected(g: Graph) -> bool:
    """
    Breadth-first reachability from vertex 0.

    Args:
        g (Graph): Any graph.

    Returns:
        bool: True if every vertex is reached.
    """
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    seen = frontier = 1
    while frontier:
        reached = 0
        for v in iter_bits(frontier):
            reached |= g.rows[v]
        frontier = reached & ~seen
        seen |= frontier
    return seen == full


@ensure(lambda g, result: result.n == g.n)
@ensure(lambda g, result: result.edge_count == g.n * (g.n - 1) // 2 - g.edge_count)
def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~row & ~(1 << i) for i, row in enumerate(g.rows)])


@ensure(lambda g, result: sum(result) == 2 * g.edge_count)
def degree_sequence(g: Graph) -> list[int]:
    """Per-vertex degrees in label order."""
    return [row.bit_count() for row in g.rows]


def is_regular(g: Graph) -> bool:
    return len(set(degree_sequence(g))) <= 1


@require(lambda g, v: 0 <= v < g.n, "vertex out of range", error=GraphError)
@require(lambda g: g.n >= 2, "cannot delete the only vertex", error=GraphError)
@ensure(lambda g, result: result.n == g.n - 1)
def delete_vertex(g: Graph, v: int) -> Graph:
    """
    Induced subgraph G - v; remaining vertices keep their relative order.

    Args:
        g (Graph): Source graph with at least two vertices.
        v (int): Vertex to remove.

    Returns:
        Graph: The subgraph on n-1 vertices.
    """
    low = (1 << v) - 1
    rows = []
    for i, row in enumerate(g.rows):
        if i == v:
            continue
        rows.append((row & low) | ((row >> (v + 1)) << v))
    return Graph(g.n - 1, rows)


def disjoint_union(*graphs: Graph) -> Graph:
    """Places the graphs side by side, relabelling consecutively."""
    rows = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.rows)
        offset += g.n
    if offset > MAX_ORDER:
        raise GraphError(f"union has {offset} vertices, more than {MAX_ORDER}")
    return Graph(offset, rows)


def components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest label."""
    remaining = (1 << g.n) - 1
    result = []
    while remaining:
        start = remaining & -remaining
        seen = frontier = start
        while frontier:
            reached = 0
            for v in iter_bits(frontier):
                reached |= g.rows[v]
            frontier = reached & ~seen
            seen |= frontier
        result.append(list(iter_bits(seen)))
        remaining &= ~seen
    return result


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
