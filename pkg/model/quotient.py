from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from icontract import ensure

from model.spectra import SymmetricMatrix

EQUITABLE_TOLERANCE = 1e-12


class QuotientError(ValueError):
    """Raised when a vertex partition does not cover the matrix exactly once."""


@dataclass(frozen=True, eq=False)
class QuotientMatrix:
    """
    Block-average matrix of a partitioned matrix.

    Attributes:
        t (int): Number of blocks.
        b (np.ndarray): t x t matrix; b[i, j] is the average row sum of block (i, j).
        equitable (bool): Whether every block has constant row sums.
    """
    t: int
    b: np.ndarray
    equitable: bool

    def spectral_radius(self) -> float:
        """Largest real part among the eigenvalues of b (b need not be symmetric)."""
        return float(np.max(np.linalg.eigvals(self.b).real))


def _validate_partition(n: int, partition: Sequence[Sequence[int]]) -> list[list[int]]:
    blocks = [list(block) for block in partition]
    if any(not block for block in blocks):
        raise QuotientError("partition contains an empty block")
    seen: set[int] = set()
    for block in blocks:
        for v in block:
            if not 0 <= v < n:
                raise QuotientError(f"vertex {v} is outside 0..{n - 1}")
            if v in seen:
                raise QuotientError(f"vertex {v} appears in more than one block")
            seen.add(v)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise QuotientError(f"partition does not cover vertices {missing}")
    return blocks


@ensure(lambda partition, result: result.t == len(partition))
def equitable_quotient(m: SymmetricMatrix, partition: Sequence[Sequence[int]]) -> QuotientMatrix:
    """
    Quotient matrix of m with respect to a vertex partition.

    The equitable flag is set when, for every pair of blocks, all rows of the
    block have the same sum up to 1e-12 (relative to the magnitude of the sum).
    When equitable, the spectral radius of b equals that of m; callers check that.

    Args:
        m (SymmetricMatrix): Matrix to partition.
        partition (Sequence[Sequence[int]]): Disjoint blocks covering 0..n-1.

    Returns:
        QuotientMatrix: Block averages and the equitable flag.

    Raises:
        QuotientError: If the partition is not a partition of the vertex set.
    """
    blocks = _validate_partition(m.n, partition)
    t = len(blocks)
    b = np.zeros((t, t))
    equitable = True
    for i, rows in enumerate(blocks):
        for j, cols in enumerate(blocks):
            sums = m.entries[np.ix_(rows, cols)].sum(axis=1)
            b[i, j] = float(sums.mean())
            spread = float(sums.max() - sums.min())
            if spread > EQUITABLE_TOLERANCE * max(1.0, abs(b[i, j])):
                equitable = False
    b.flags.writeable = False
    return QuotientMatrix(t, b, equitable)
