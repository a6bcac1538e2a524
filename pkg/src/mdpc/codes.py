"""Cyclic code records, the idempotent-driven code search, parity-check
matrices built from cyclic shifts, and exact distance/weight analysis."""

import functools
import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import gf2poly, gfield
from .cyclotomic import build_cosets, is_idempotent, reversed_coset_polynomial


class RankDeficiencyError(ValueError):
    """The requested shift rows do not span the dual code."""


class InfeasibleError(RuntimeError):
    """Exact enumeration would exceed the configured budget."""


@dataclass(frozen=True)
class CyclicCode:
    """(n, k) cyclic code defined by a dual generating idempotent.

    g and h are the generator and parity-check polynomials with
    g * h = x^n + 1, chosen so that every cyclic shift of the idual
    coefficient vector is orthogonal to every codeword.
    """

    n: int
    k: int
    g: int
    h: int
    idual: int
    bch_bound: int
    name: str | None = None
    dual_min_weight: int | None = None

    @property
    def rate(self) -> float:
        return self.k / self.n

    def contains(self, word: int) -> bool:
        """Membership test for a packed length-n word: g divides its polynomial."""
        return gf2poly.mod(word, self.g) == 0


@dataclass(eq=False)
class ParityCheckMatrix:
    """m redundant rows, row t the cyclic shift by t of the idual coefficients."""

    matrix: np.ndarray  # (m, n) uint8
    n: int
    m: int
    rank: int

    @property
    def row_weight(self) -> int:
        return int(self.matrix[0].sum())


@dataclass(frozen=True)
class WeightDistribution:
    """Codeword counts by Hamming weight, exact integers.

    ``truncated_at`` marks a distribution whose counts above that weight
    are unknown (stored as zero); None means the distribution is complete.
    """

    n: int
    counts: tuple[int, ...]
    truncated_at: int | None = None

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError(f"need {self.n + 1} counts, got {len(self.counts)}")

    @property
    def min_weight(self) -> int:
        """Smallest nonzero weight with a positive count."""
        for d in range(1, self.n + 1):
            if self.counts[d]:
                return d
        raise ValueError("distribution has no nonzero-weight words")

    @property
    def total(self) -> int:
        return sum(self.counts)


def rank_of_shifts(p: int, n: int, m: int) -> int:
    """GF(2) rank of the first m cyclic shifts of p's coefficient vector."""
    basis: list[int] = []
    pivots: list[int] = []
    for t in range(m):
        cur = gf2poly.cyclic_shift(p, t, n)
        for b, piv in zip(basis, pivots):
            if (cur >> piv) & 1:
                cur ^= b
        if cur:
            basis.append(cur)
            pivots.append(cur.bit_length() - 1)
    return len(basis)


def bch_bound_of_generator(g: int, ctx: gfield.FieldContext) -> int:
    """One plus the longest cyclic run of consecutive residues in the zero set.

    Coset membership in the zero set is decided by minimal-polynomial
    divisibility, which is exact and avoids per-root field evaluation.
    """
    n = ctx.n
    table = build_cosets(n)
    in_zero = [False] * n
    for s in table.representatives:
        if gf2poly.mod(g, gfield.minimal_polynomial(ctx, s)) == 0:
            for i in table.coset(s):
                in_zero[i] = True
    if all(in_zero):
        return n + 1  # only x^n + 1 itself; degenerate and rejected upstream
    if not any(in_zero):
        return 1
    # longest run with cyclic wraparound
    best = run = 0
    for v in in_zero + in_zero:
        run = run + 1 if v else 0
        best = max(best, run)
    return min(best, n - 1) + 1


def from_dual_idempotent(
    idual: int,
    n: int,
    ctx: gfield.FieldContext | None = None,
    name: str | None = None,
    dual_min_weight: int | None = None,
) -> CyclicCode:
    """Build the cyclic code whose dual is generated by the idempotent idual.

    h is the reciprocal of gcd(idual, x^n + 1), so that shifts of idual are
    genuinely orthogonal to the code generated by g = (x^n + 1) / h; the
    gcd itself generates the dual and has degree k.
    """
    if not is_idempotent(idual, n):
        raise ValueError("idual is not an idempotent mod x^n + 1")
    xn1 = gf2poly.x_pow_n_plus_1(n)
    dual_gen = gf2poly.gcd(idual, xn1)
    k = dual_gen.bit_length() - 1
    if k <= 0 or k >= n:
        raise ValueError(f"degenerate code: gcd degree {k} for n={n}")
    h = gf2poly.reciprocal(dual_gen)
    g = gf2poly.div_exact(xn1, h)
    if ctx is None:
        ctx = gfield.build_context(n)
    bound = bch_bound_of_generator(g, ctx)
    return CyclicCode(
        n=n, k=k, g=g, h=h, idual=idual, bch_bound=bound,
        name=name, dual_min_weight=dual_min_weight,
    )


def bch_bound(code: CyclicCode, ctx: gfield.FieldContext) -> int:
    """BCH designed-distance lower bound of the code's generator."""
    if ctx.n != code.n:
        raise ValueError("field context was built for a different block length")
    return bch_bound_of_generator(code.g, ctx)


def search_mdpc(n: int, d: int, n_id: int, ctx: gfield.FieldContext | None = None) -> CyclicCode | None:
    """Exhaustive idempotent search for a moderate-density code.

    Examines every n_id-combination of nonzero coset representatives in
    lexicographic order; each yields the candidate dual idempotent
    1 + sum of reversed coset polynomials.  Keeps the highest-rate
    candidate whose BCH bound reaches d, later ties replacing earlier
    ones.  Returns None when no candidate qualifies.
    """
    if d < 2:
        raise ValueError(f"target distance must be >= 2, got {d}")
    table = build_cosets(n)
    nonzero = table.representatives[1:]
    if not 1 <= n_id <= len(nonzero):
        raise ValueError(f"n_id must be in [1, {len(nonzero)}], got {n_id}")
    if ctx is None:
        ctx = gfield.build_context(n)
    xn1 = gf2poly.x_pow_n_plus_1(n)
    blocks = {s: reversed_coset_polynomial(table, s) for s in nonzero}
    minpolys = {s: gfield.minimal_polynomial(ctx, s) for s in table.representatives}

    best_idual = None
    best_k = -1
    for combo in itertools.combinations(nonzero, n_id):
        idual = 1
        for s in combo:
            idual ^= blocks[s]
        dual_gen = gf2poly.gcd(idual, xn1)
        k = dual_gen.bit_length() - 1
        if k <= 0 or k >= n or k < best_k:
            continue
        g = gf2poly.div_exact(xn1, gf2poly.reciprocal(dual_gen))
        in_zero = [False] * n
        for s, mp in minpolys.items():
            if gf2poly.mod(g, mp) == 0:
                for i in table.coset(s):
                    in_zero[i] = True
        best = run = 0
        for v in in_zero + in_zero:
            run = run + 1 if v else 0
            best = max(best, run)
        bound = min(best, n - 1) + 1
        if bound >= d and k >= best_k:
            best_idual = idual
            best_k = k
    if best_idual is None:
        return None
    return from_dual_idempotent(best_idual, n, ctx)


def build_parity_matrix(code: CyclicCode, m: int, allow_dense: bool = False) -> ParityCheckMatrix:
    """m cyclic shifts of the idual coefficients, rank-verified at build time.

    The density guard m <= n/2 reflects the design target for redundant
    decoding graphs; pass allow_dense=True to exceed it deliberately.
    """
    n = code.n
    if m < 1:
        raise ValueError("need at least one parity-check row")
    if m > n // 2 and not allow_dense:
        raise ValueError(
            f"m={m} exceeds the density guard n/2={n // 2}; pass allow_dense=True to override"
        )
    rank = rank_of_shifts(code.idual, n, m)
    if rank != n - code.k:
        raise RankDeficiencyError(
            f"{m} shifts of idual reach rank {rank}, need {n - code.k} to define the code"
        )
    matrix = np.zeros((m, n), dtype=np.uint8)
    for t in range(m):
        row = gf2poly.cyclic_shift(code.idual, t, n)
        for j in range(n):
            matrix[t, j] = (row >> j) & 1
    return ParityCheckMatrix(matrix=matrix, n=n, m=m, rank=rank)


@functools.lru_cache(maxsize=32)
def generator_matrix(code: CyclicCode) -> np.ndarray:
    """(k, n) generator matrix; row j holds the coefficients of x^j g(x)."""
    G = np.zeros((code.k, code.n), dtype=np.uint8)
    for j in range(code.k):
        row = code.g << j
        for i in range(code.n):
            G[j, i] = (row >> i) & 1
    G.setflags(write=False)
    return G


def encode(code: CyclicCode, u) -> np.ndarray:
    """Non-systematic polynomial encoding c(x) = u(x) g(x)."""
    u = np.asarray(u, dtype=np.uint8)
    if u.shape != (code.k,):
        raise ValueError(f"information word must have length k={code.k}, got shape {u.shape}")
    return (u @ generator_matrix(code)) & 1


# ---------------------------------------------------------------------------
# exact weight distributions

_POP16 = None


def _popcounts(rows: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(rows).sum(axis=1, dtype=np.int64)
    global _POP16
    if _POP16 is None:
        _POP16 = np.array([bin(v).count("1") for v in range(1 << 16)], dtype=np.uint8)
    return _POP16[rows.view(np.uint16)].sum(axis=1, dtype=np.int64)


def _gray_flip(i: int) -> int:
    """Index of the bit that differs between gray(i-1) and gray(i)."""
    return ((i ^ (i >> 1)) ^ ((i - 1) ^ ((i - 1) >> 1))).bit_length() - 1


def enumerate_span_weights(basis: list[int], n: int) -> np.ndarray:
    """Weight histogram of the span of the given GF(2) rows, length n + 1.

    Walks information words in Gray-code order so each enumerated word is
    one row XOR away from its predecessor; the low 16 information bits are
    precomputed as a table so the walk is vectorised in blocks of 2^16.
    """
    r = len(basis)
    words = (n + 63) // 64
    packed = np.zeros((max(r, 1), words), dtype=np.uint64)
    for i, row in enumerate(basis):
        for w in range(words):
            packed[i, w] = (row >> (64 * w)) & 0xFFFFFFFFFFFFFFFF

    hist = np.zeros(n + 1, dtype=np.int64)
    r_lo = min(16, r)
    table = np.zeros((1 << r_lo, words), dtype=np.uint64)
    for i in range(1, 1 << r_lo):
        table[i] = table[i - 1] ^ packed[_gray_flip(i)]

    acc = np.zeros(words, dtype=np.uint64)
    for hi in range(1 << (r - r_lo)):
        if hi:
            acc = acc ^ packed[r_lo + _gray_flip(hi)]
        hist += np.bincount(_popcounts(table ^ acc), minlength=n + 1)
    return hist


def _span_distribution(gen_poly: int, dim: int, n: int) -> WeightDistribution:
    basis = [gen_poly << j for j in range(dim)]
    hist = enumerate_span_weights(basis, n)
    return WeightDistribution(n=n, counts=tuple(int(c) for c in hist))


def dual_weight_distribution(code: CyclicCode, budget_log2: int = 30) -> WeightDistribution:
    """Exact weight distribution of the dual code by direct enumeration."""
    r = code.n - code.k
    if r > budget_log2:
        raise InfeasibleError(f"dual enumeration needs 2^{r} words, budget is 2^{budget_log2}")
    return _span_distribution(gf2poly.reciprocal(code.h), r, code.n)


def macwilliams_transform(dual_dist: WeightDistribution, n: int, k: int) -> WeightDistribution:
    """Weight distribution of the code from its dual's, exact integers.

    Binary MacWilliams identity via Krawtchouk polynomials:
    A_j = 2^-(n-k) * sum_i B_i * K_j(i).
    """
    if dual_dist.n != n:
        raise ValueError("distribution length mismatch")
    if dual_dist.truncated_at is not None:
        raise ValueError("MacWilliams transform needs the complete dual distribution")
    if dual_dist.total != 1 << (n - k):
        raise ValueError(
            f"dual distribution sums to {dual_dist.total}, expected 2^{n - k}"
        )
    B = dual_dist.counts
    nonzero = [i for i in range(n + 1) if B[i]]
    counts = []
    scale = 1 << (n - k)
    for j in range(n + 1):
        total = 0
        for i in nonzero:
            kraw = 0
            for l in range(max(0, j - (n - i)), min(i, j) + 1):
                term = math.comb(i, l) * math.comb(n - i, j - l)
                kraw += -term if l & 1 else term
            total += B[i] * kraw
        q, rem = divmod(total, scale)
        if rem:
            raise AssertionError(f"MacWilliams sum not divisible at weight {j}")
        counts.append(q)
    return WeightDistribution(n=n, counts=tuple(counts))


def weight_distribution(code: CyclicCode, budget_log2: int = 30) -> WeightDistribution:
    """Exact weight distribution of the code, enumerating the smaller of the
    code and its dual (the dual route goes through MacWilliams)."""
    r = code.n - code.k
    if min(code.k, r) > budget_log2:
        raise InfeasibleError(
            f"enumeration needs 2^{min(code.k, r)} words, budget is 2^{budget_log2}"
        )
    if code.k <= r:
        return _span_distribution(code.g, code.k, code.n)
    return macwilliams_transform(dual_weight_distribution(code, budget_log2), code.n, code.k)


def min_distance_bruteforce(code: CyclicCode, budget_log2: int = 30) -> int:
    """Exact minimum distance within the enumeration budget."""
    return weight_distribution(code, budget_log2).min_weight
