"""Analytical union bounds on BER and FER from a weight distribution."""

import math
from dataclasses import dataclass

from .codes import WeightDistribution


@dataclass(frozen=True)
class BoundPoint:
    ebno_db: float
    ber_bound: float
    fer_bound: float


@dataclass(frozen=True)
class UnionBoundResult:
    points: tuple[BoundPoint, ...]
    truncated_at: int | None


def q_function(x: float) -> float:
    """Gaussian tail probability Q(x) = erfc(x / sqrt(2)) / 2."""
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def union_bound(dist: WeightDistribution, n: int, k: int, ebno_db_values) -> UnionBoundResult:
    """Union-bound BER and FER curves over the given Eb/N0 grid (dB).

    BER <= (1/n) sum_d A_d d Q(sqrt(2 (k/n) d Eb/N0)) and FER drops the
    d/n factor; the zero-weight word is excluded.  A truncated distribution
    yields a lower approximation to both bounds, reported via truncated_at.
    """
    if dist.n != n:
        raise ValueError(f"distribution is for n={dist.n}, not n={n}")
    terms = [(d, a) for d, a in enumerate(dist.counts) if d >= 1 and a]
    if not terms:
        raise ValueError("weight distribution has no nonzero-weight terms")
    rate = k / n
    points = []
    for ebno_db in ebno_db_values:
        ebno = 10.0 ** (ebno_db / 10.0)
        fer = 0.0
        ber = 0.0
        for d, a in terms:
            tail = float(a) * q_function(math.sqrt(2.0 * rate * d * ebno))
            fer += tail
            ber += d * tail
        points.append(BoundPoint(ebno_db=float(ebno_db), ber_bound=ber / n, fer_bound=fer))
    return UnionBoundResult(points=tuple(points), truncated_at=dist.truncated_at)
