import random
from icontract import require, ensure

from model.graph import MAX_ORDER, Graph, graph_from_edges, is_connected


class Utility:
    """Helper methods shared by the model, controller and views."""

    @staticmethod
    @require(lambda n: isinstance(n, int) and 1 <= n <= MAX_ORDER, "n must be an integer in [1, 62]", error=ValueError)
    @require(lambda p: 0.0 <= p <= 1.0, "edge probability must lie in [0, 1]", error=ValueError)
    @ensure(lambda n, result: result.n == n)
    def random_graph(n: int, p: float, rng: random.Random) -> Graph:
        """
        Erdos-Renyi style graph: every pair becomes an edge with probability p.

        Args:
            n (int): Number of vertices.
            p (float): Edge probability.
            rng (random.Random): Source of randomness, seeded by the caller.

        Returns:
            Graph: The sampled graph (not necessarily connected).
        """
        return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])

    @staticmethod
    @require(lambda n: isinstance(n, int) and 1 <= n <= MAX_ORDER, "n must be an integer in [1, 62]", error=ValueError)
    @require(lambda p: 0.0 <= p <= 1.0, "edge probability must lie in [0, 1]", error=ValueError)
    @ensure(lambda result: is_connected(result), "the sampled graph must be connected")
    def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
        """
        Random connected graph: a random spanning tree plus independent extra edges.

        Each vertex v > 0 (in a shuffled order) attaches to a uniformly chosen
        earlier vertex, then every remaining pair is added with probability p.

        Args:
            n (int): Number of vertices.
            p (float): Probability of each non-tree edge.
            rng (random.Random): Source of randomness, seeded by the caller.

        Returns:
            Graph: A connected graph on n vertices.
        """
        order = list(range(n))
        rng.shuffle(order)
        tree = {tuple(sorted((order[k], order[rng.randrange(k)]))) for k in range(1, n)}
        extra = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in tree and rng.random() < p]
        return graph_from_edges(n, list(tree) + extra)

    @staticmethod
    @ensure(lambda result: len(result) > 0, "at least one alpha value is required")
    def parse_alpha_list(text: str, allow_one: bool) -> list[float]:
        """
        Parses a comma separated list of alpha values.

        Args:
            text (str): e.g. "0,0.25,0.5".
            allow_one (bool): Whether alpha = 1 is acceptable (plain spectral
                analysis) or must be rejected (bound commands need alpha < 1).

        Returns:
            list[float]: The values in the order given, duplicates removed.

        Raises:
            ValueError: If a value is not a number or lies outside the allowed range.
        """
        values: list[float] = []
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            try:
                alpha = float(item)
            except ValueError:
                raise ValueError(f"alpha value {item!r} is not a number")
            if not 0.0 <= alpha <= 1.0:
                raise ValueError(f"alpha value {alpha} lies outside [0, 1]")
            if alpha == 1.0 and not allow_one:
                raise ValueError("alpha must be < 1 for the bound: the theorem assumes alpha in [0, 1)")
            if alpha not in values:
                values.append(alpha)
        if not values:
            raise ValueError("no alpha values given")
        return values

    @staticmethod
    def parse_parts(text: str) -> tuple[int, ...]:
        """
        Parses part sizes such as "1,2,2".

        Raises:
            ValueError: If a size is not a positive integer or the list is empty.
        """
        try:
            parts = tuple(int(item) for item in text.split(",") if item.strip())
        except ValueError:
            raise ValueError(f"part sizes {text!r} must be comma separated integers")
        if not parts or any(p <= 0 for p in parts):
            raise ValueError(f"part sizes {text!r} must be positive")
        return parts

    @staticmethod
    def significant(value: float | None, digits: int = 15) -> float | None:
        """Rounds to the given number of significant digits (None passes through)."""
        if value is None:
            return None
        return float(f"{value:.{digits}g}")

    @staticmethod
    def fixed(value: float | None, places: int = 6) -> str:
        """Fixed-point text for tables; '-' for missing values."""
        if value is None:
            return "-"
        return f"{value:.{places}f}"
