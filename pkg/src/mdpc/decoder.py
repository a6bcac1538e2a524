"""Sum-product decoding on the redundant shift graph, wrapped by the
auto-diversity loop: repeated BP attempts on automorphism-permuted inputs
with a least-metric selection over the stored failures."""

from dataclasses import dataclass

import numpy as np

from . import autgroup
from .codes import CyclicCode, ParityCheckMatrix
from .cyclotomic import multiplicative_order_of_two

_NEAR_ONE = float(np.nextafter(1.0, 0.0))


class TannerGraph:
    """Edge layout of a parity-check matrix whose rows all share one weight.

    Edges are stored check-major as a (m, w) table of variable indices,
    which lets the check update run as row-wise products and the variable
    update as one bincount.
    """

    def __init__(self, pcm: ParityCheckMatrix):
        weights = pcm.matrix.sum(axis=1)
        if not (weights == weights[0]).all():
            raise ValueError("rows of a shift-built matrix must share one weight")
        self.n = pcm.n
        self.m = pcm.m
        self.row_weight = int(weights[0])
        self.var_of_edge = np.nonzero(pcm.matrix)[1].reshape(self.m, self.row_weight)
        self.var_of_edge = self.var_of_edge.astype(np.int32)
        self._flat_var = self.var_of_edge.ravel()

    @property
    def edge_count(self) -> int:
        return self.m * self.row_weight

    def syndrome(self, hard: np.ndarray) -> np.ndarray:
        return hard[self.var_of_edge].sum(axis=1) & 1


@dataclass(frozen=True)
class AdConfig:
    max_iterations: int = 50
    max_stages: int = 30
    llr_clip: float = 25.0

    def __post_init__(self):
        if self.max_iterations < 1 or self.max_stages < 1:
            raise ValueError("iteration and stage limits must be >= 1")
        if self.llr_clip <= 0:
            raise ValueError("LLR clip must be positive")


@dataclass
class DecodeOutcome:
    codeword: np.ndarray
    converged: bool
    stages: int
    iterations: int
    selected_by_lms: bool


def bp_decode(L, graph: TannerGraph, max_iters: int, clip: float = 25.0):
    """Flooding-schedule sum-product; returns (hard decision, iterations, converged).

    Check updates use the tanh product rule with magnitude clipping, the
    clip keeping every arctanh argument strictly inside (-1, 1) so no
    saturation NaN can occur.  The hard decision and syndrome are evaluated
    every iteration and a zero syndrome exits early.  Hard-decision rule:
    bit 1 iff the posterior LLR is negative (an exact zero decides 0).
    """
    L = np.asarray(L, dtype=np.float64)
    if L.shape != (graph.n,):
        raise ValueError(f"expected {graph.n} channel LLRs, got shape {L.shape}")
    if max_iters < 1:
        raise ValueError("need at least one iteration")
    w = graph.row_weight
    v2c = L[graph.var_of_edge]
    hard = np.zeros(graph.n, dtype=np.uint8)
    for it in range(1, max_iters + 1):
        t = np.tanh(np.clip(v2c, -clip, clip) * 0.5)
        left = np.cumprod(t, axis=1)
        right = np.cumprod(t[:, ::-1], axis=1)[:, ::-1]
        loo = np.empty_like(t)
        loo[:, 0] = right[:, 1]
        loo[:, -1] = left[:, -2]
        if w > 2:
            loo[:, 1:-1] = left[:, :-2] * right[:, 2:]
        c2v = np.clip(2.0 * np.arctanh(np.clip(loo, -_NEAR_ONE, _NEAR_ONE)), -clip, clip)
        posterior = L + np.bincount(graph._flat_var, weights=c2v.ravel(), minlength=graph.n)
        hard = (posterior < 0).astype(np.uint8)
        if not graph.syndrome(hard).any():
            return hard, it, True
        v2c = posterior[graph.var_of_edge] - c2v
    return hard, max_iters, False


def lms_select(candidates, y) -> np.ndarray:
    """Candidate closest to y in Euclidean distance after BPSK modulation.

    Equivalent to maximising the correlation sum of y_v (1 - 2 c_v); ties
    resolve to the earliest (lowest-stage) candidate.
    """
    cands = np.atleast_2d(np.asarray(candidates, dtype=np.uint8))
    if cands.size == 0:
        raise ValueError("least-metric selection needs at least one candidate")
    y = np.asarray(y, dtype=np.float64)
    correlation = (1.0 - 2.0 * cands) @ y
    return cands[int(np.argmax(correlation))]


def ad_decode(
    si,
    graph: TannerGraph,
    code: CyclicCode,
    cfg: AdConfig,
    y,
    rng: np.random.Generator,
) -> DecodeOutcome:
    """Auto-diversity decoding of one received frame.

    Stage 1 runs BP on the soft input unchanged.  Each later stage draws a
    fresh automorphism, accumulates it into a composite permutation, decodes
    the inverse-permuted input on the fixed graph, and maps the result back
    before the validity check - equivalent to decoding the original input on
    the permuted graph.  The first valid codeword wins; if every stage
    fails, the least-metric selector picks among the stored stage outputs.
    """
    si = np.asarray(si, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if si.shape != (graph.n,) or y.shape != (graph.n,):
        raise ValueError("soft input and received vector must both have length n")
    if code.n != graph.n:
        raise ValueError("graph and code disagree on block length")
    coset1 = multiplicative_order_of_two(code.n)

    pi = autgroup.identity(graph.n)
    candidates = np.empty((cfg.max_stages, graph.n), dtype=np.uint8)
    iterations = 0
    for stage in range(1, cfg.max_stages + 1):
        if stage == 1:
            stage_input = si
        else:
            sigma = autgroup.sample_random(graph.n, coset1, rng)
            pi = autgroup.compose(sigma, pi)
            stage_input = autgroup.apply(autgroup.inverse(pi), si)
        hard, iters, converged = bp_decode(stage_input, graph, cfg.max_iterations, cfg.llr_clip)
        iterations += iters
        estimate = autgroup.apply(pi, hard)
        if converged:
            return DecodeOutcome(
                codeword=estimate, converged=True, stages=stage,
                iterations=iterations, selected_by_lms=False,
            )
        candidates[stage - 1] = estimate
    return DecodeOutcome(
        codeword=lms_select(candidates, y), converged=False,
        stages=cfg.max_stages, iterations=iterations, selected_by_lms=True,
    )
