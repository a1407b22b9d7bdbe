from dataclasses import dataclass
from enum import Enum
from icontract import ensure

from model.distance import DisconnectedGraphError, apsp
from model.graph import Graph, complement, components, degree_sequence, delete_vertex, is_connected
from model.spectra import TransmissionVector, transmissions


class ClassTag(Enum):
    """Structural classes, listed in the order classify tests them."""
    TRANSMISSION_REGULAR = "TransmissionRegular"
    EXTREMAL_ODD = "ExtremalOdd"
    EXTREMAL_EVEN_DVDR = "ExtremalEvenDVDR"
    DVDR = "Dvdr"
    OTHER = "Other"


@dataclass(frozen=True)
class GraphClass:
    """
    Result of structural classification.

    Attributes:
        tag (ClassTag): The class.
        details (str): Human-readable diagnostic.
        hub (int | None): Distinguished vertex, for extremal and DVDR classes.
        r (int | None): Regularity of G - hub, for DVDR-type classes.
        cycle_lengths (tuple[int, ...] | None): Cycle lengths of the complement
            of G - hub, descending, for ExtremalEvenDVDR.
    """
    tag: ClassTag
    details: str
    hub: int | None = None
    r: int | None = None
    cycle_lengths: tuple[int, ...] | None = None

    @property
    def is_extremal(self) -> bool:
        return self.tag in (ClassTag.EXTREMAL_ODD, ClassTag.EXTREMAL_EVEN_DVDR)

    @property
    def label(self) -> str:
        match self.tag:
            case ClassTag.EXTREMAL_EVEN_DVDR:
                return f"{self.tag.value}({','.join(map(str, self.cycle_lengths))})"
            case ClassTag.DVDR:
                return f"{self.tag.value}({self.r})"
            case _:
                return self.tag.value


def _hubs(g: Graph) -> list[int]:
    return [v for v, degree in enumerate(degree_sequence(g)) if degree == g.n - 1]


@ensure(lambda g, result: result is None or 0 <= result <= g.n - 2)
def is_dvdr(g: Graph) -> int | None:
    """
    Regularity r if g is an r-DVDR graph.

    Hubs (vertices of degree n-1) are tried in label order; the first whose
    removal leaves a regular graph decides r.

    Args:
        g (Graph): Connected graph.

    Returns:
        int | None: r, or None when no hub leaves a regular remainder (or n < 2).
    """
    if g.n < 2:
        return None
    for hub in _hubs(g):
        degrees = set(degree_sequence(delete_vertex(g, hub)))
        if len(degrees) == 1:
            return degrees.pop()
    return None


def _cycle_lengths_of_complement(rest: Graph, degree: int) -> tuple[int, ...] | None:
    """Component sizes of complement(rest) when that complement is degree-regular, else None."""
    co = complement(rest)
    if set(degree_sequence(co)) != {degree}:
        return None
    return tuple(sorted((len(c) for c in components(co)), reverse=True))


def classify(g: Graph, t: TransmissionVector | None = None) -> GraphClass:
    """
    Decides the structural class of a connected graph without isomorphism testing.

    Order of tests: transmission regular; K_{1,2,...,2} (odd n: one hub and the
    complement of G - hub is a perfect matching); (n-4)-DVDR (even n: one hub
    and the complement of G - hub is 2-regular, i.e. disjoint cycles); any
    other DVDR graph; everything else.

    Args:
        g (Graph): Connected graph.
        t (TransmissionVector | None): Precomputed transmissions of g.

    Returns:
        GraphClass: Tag plus hub, regularity and cycle data where relevant.

    Raises:
        DisconnectedGraphError: If g is disconnected.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")
    t = transmissions(apsp(g)) if t is None else t
    if t.is_regular:
        return GraphClass(ClassTag.TRANSMISSION_REGULAR, f"every transmission equals {t.tr_max}")

    hubs = _hubs(g)
    if len(hubs) == 1 and g.n >= 3:
        hub = hubs[0]
        rest = delete_vertex(g, hub)
        if g.n % 2 == 1 and _cycle_lengths_of_complement(rest, 1) is not None:
            return GraphClass(
                ClassTag.EXTREMAL_ODD, f"K_{{1,{','.join(['2'] * ((g.n - 1) // 2))}}} with hub {hub}", hub=hub, r=g.n - 3
            )
        if g.n % 2 == 0:
            cycles = _cycle_lengths_of_complement(rest, 2)
            if cycles is not None:
                return GraphClass(
                    ClassTag.EXTREMAL_EVEN_DVDR,
                    f"(n-4)-DVDR with hub {hub}; complement of G-hub is cycles {list(cycles)}",
                    hub=hub,
                    r=g.n - 4,
                    cycle_lengths=cycles,
                )

    r = is_dvdr(g)
    if r is not None:
        hub = next(h for h in hubs if set(degree_sequence(delete_vertex(g, h))) == {r})
        return GraphClass(ClassTag.DVDR, f"{r}-DVDR with hub {hub}", hub=hub, r=r)
    return GraphClass(ClassTag.OTHER, f"transmissions range over [{t.tr_min}, {t.tr_max}]")
