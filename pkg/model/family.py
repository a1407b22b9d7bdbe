import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from icontract import require, ensure, invariant

from model.graph import Graph, GraphError, complement, degree_sequence, disjoint_union, graph_from_edges, is_regular
from shared.utility import Utility


class FamilyError(ValueError):
    """Raised when a family cannot be built with the requested parameters."""


class FamilyKind(Enum):
    """
    Graph families the generator can build.

    Attributes:
        label (str): Name used on the command line.
        min_order (int): Smallest order the family is defined for.
    """
    COMPLETE_MULTIPARTITE = ("multipartite", 1)
    DVDR_FROM_REGULAR = ("dvdr", 1)
    PATH = ("path", 1)
    CYCLE = ("cycle", 3)
    COMPLETE = ("complete", 1)
    STAR = ("star", 2)
    WHEEL = ("wheel", 4)
    COCKTAIL_PARTY = ("cocktail-party", 2)
    EXTREMAL = ("extremal", 3)
    RANDOM = ("random", 1)

    @property
    def label(self) -> str:
        return self.value[0]

    @property
    def min_order(self) -> int:
        return self.value[1]

    @classmethod
    def from_label(cls, label: str) -> "FamilyKind":
        for kind in cls:
            if kind.label == label:
                return kind
        raise FamilyError(f"unknown family {label!r}; choose from {', '.join(k.label for k in cls)}")


@invariant(lambda self: self.n >= self.kind.min_order, "order is below the family minimum", error=FamilyError)
@invariant(
    lambda self: self.kind != FamilyKind.COMPLETE_MULTIPARTITE
    or (self.parts is not None and all(p > 0 for p in self.parts) and sum(self.parts) == self.n),
    "part sizes must be positive and sum to n",
    error=FamilyError,
)
@invariant(
    lambda self: self.kind != FamilyKind.DVDR_FROM_REGULAR
    or (self.base is not None and is_regular(self.base) and self.base.n == self.n - 1),
    "a DVDR base must be regular on n-1 vertices",
    error=FamilyError,
)
@invariant(lambda self: self.kind != FamilyKind.COCKTAIL_PARTY or self.n % 2 == 0, "cocktail-party graphs have even order", error=FamilyError)
@dataclass(frozen=True)
class FamilySpec:
    """
    Parameters for one family request.

    Attributes:
        kind (FamilyKind): Which family.
        n (int): Order of the generated graphs.
        parts (tuple[int, ...] | None): Part sizes for complete multipartite graphs.
        base (Graph | None): Regular base for DVDR construction.
        count (int): Number of samples for the random family.
        seed (int): Seed for the random family.
        edge_probability (float): Edge density for the random family.
    """
    kind: FamilyKind
    n: int
    parts: tuple[int, ...] | None = None
    base: Graph | None = None
    count: int = 1
    seed: int = 0
    edge_probability: float = 0.3


def make_path(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


@require(lambda n: n >= 3, "a cycle needs at least three vertices", error=FamilyError)
def make_cycle(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@require(lambda n: n >= 2, "a star needs at least two vertices", error=FamilyError)
def make_star(n: int) -> Graph:
    """K_{1,n-1} with hub 0."""
    return graph_from_edges(n, [(0, j) for j in range(1, n)])


@require(lambda parts: len(parts) > 0, "at least one part is required", error=FamilyError)
@require(lambda parts: all(isinstance(p, int) and p > 0 for p in parts), "part sizes must be positive integers", error=FamilyError)
@ensure(lambda parts, result: result.n == sum(parts))
def make_complete_multipartite(parts: Sequence[int]) -> Graph:
    """
    Complete multipartite graph; parts take consecutive labels in the given order.

    Args:
        parts (Sequence[int]): Part sizes. [1, 2, ..., 2] gives K_{1,2,...,2} with the singleton at vertex 0.

    Returns:
        Graph: i~j iff i and j lie in different parts.
    """
    owner = [index for index, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if owner[i] != owner[j]])


@require(lambda k: k >= 1, "need at least one part", error=FamilyError)
def make_cocktail_party(k: int) -> Graph:
    """K_{2,...,2} with k parts: transmission regular of order 2k."""
    return make_complete_multipartite([2] * k)


@ensure(lambda base, result: result.n == base.n + 1)
@ensure(lambda base, result: result.degree(0) == base.n, "the distinguished vertex is adjacent to all others")
def make_dvdr(base: Graph) -> Graph:
    """
    Distinguished-vertex-deleted-regular graph over a regular base.

    The new distinguished vertex is 0; base vertex i becomes i+1.

    Args:
        base (Graph): Regular graph on n-1 vertices, possibly disconnected.

    Returns:
        Graph: Connected r-DVDR graph of order n, where r is the base degree.

    Raises:
        FamilyError: If the base is not regular.
    """
    if not is_regular(base):
        raise FamilyError(f"DVDR base must be regular, got degrees {degree_sequence(base)}")
    edges = [(0, v + 1) for v in range(base.n)]
    edges += [(i + 1, j + 1) for i, j in base.edges()]
    try:
        return graph_from_edges(base.n + 1, edges)
    except GraphError as e:
        raise FamilyError(str(e)) from e


@require(lambda n: n >= 4, "a wheel needs at least four vertices", error=FamilyError)
def make_wheel(n: int) -> Graph:
    """Hub 0 joined to a cycle on 1..n-1."""
    return make_dvdr(make_cycle(n - 1))


def cycle_partitions(total: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """
    Partitions of total into parts >= 3, parts non-increasing.

    Partitions come out in decreasing lexicographic order, e.g. 9 gives
    (9,), (6, 3), (5, 4), (3, 3, 3).
    """
    largest = total if largest is None else largest
    for first in range(min(total, largest), 2, -1):
        rest = total - first
        if rest == 0:
            yield (first,)
        elif rest >= 3:
            for tail in cycle_partitions(rest, first):
                yield (first,) + tail


@require(lambda n: isinstance(n, int) and n >= 4 and n % 2 == 0, "order must be an even integer >= 4", error=FamilyError)
@ensure(lambda n, result: all(g.n == n and g.degree(0) == n - 1 for g in result))
def enumerate_n4_dvdr(n: int) -> list[Graph]:
    """
    One representative of every (n-4)-DVDR graph of order n.

    An (n-4)-regular graph on n-1 vertices is the complement of a 2-regular
    graph, i.e. of a disjoint union of cycles, so the classes correspond to
    partitions of n-1 into parts >= 3. For n = 4 the single base is the empty
    graph on three vertices (the complement of C3), giving K_{1,3}.

    Args:
        n (int): Even order, at least 4.

    Returns:
        list[Graph]: Graphs in the order of cycle_partitions(n - 1), hub at vertex 0.
    """
    return [make_dvdr(complement(disjoint_union(*(make_cycle(k) for k in parts)))) for parts in cycle_partitions(n - 1)]


@require(lambda n: isinstance(n, int) and n >= 3, "extremal graphs exist for n >= 3", error=FamilyError)
def extremal_family(n: int) -> list[Graph]:
    """
    Graphs attaining the lower bound on Tr_max - mu_alpha for order n.

    Odd n: the single graph K_{1,2,...,2}. Even n: every (n-4)-DVDR graph.
    """
    if n % 2:
        return [make_complete_multipartite([1] + [2] * ((n - 1) // 2))]
    return enumerate_n4_dvdr(n)


def build_family(spec: FamilySpec) -> list[Graph]:
    """
    Builds the graphs described by a FamilySpec.

    Args:
        spec (FamilySpec): Validated family request.

    Returns:
        list[Graph]: One graph for single-member families, several for
            extremal (even n) and random families.
    """
    match spec.kind:
        case FamilyKind.COMPLETE_MULTIPARTITE:
            return [make_complete_multipartite(spec.parts)]
        case FamilyKind.DVDR_FROM_REGULAR:
            return [make_dvdr(spec.base)]
        case FamilyKind.PATH:
            return [make_path(spec.n)]
        case FamilyKind.CYCLE:
            return [make_cycle(spec.n)]
        case FamilyKind.COMPLETE:
            return [make_complete(spec.n)]
        case FamilyKind.STAR:
            return [make_star(spec.n)]
        case FamilyKind.WHEEL:
            return [make_wheel(spec.n)]
        case FamilyKind.COCKTAIL_PARTY:
            return [make_cocktail_party(spec.n // 2)]
        case FamilyKind.EXTREMAL:
            return extremal_family(spec.n)
        case FamilyKind.RANDOM:
            rng = random.Random(spec.seed)
            return [Utility.random_connected_graph(spec.n, spec.edge_probability, rng) for _ in range(spec.count)]
    raise FamilyError(f"unsupported family {spec.kind}")
