"""Reproducible Monte Carlo harness: encode -> BPSK -> AWGN -> LLR -> AD
decode, with frame-error-targeted stopping and iteration/stage accounting.

Every frame owns a random stream derived from (master seed, grid index,
frame index), so results are bitwise independent of worker count and
scheduling; counters are exact integers merged by summation.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import channel, codes, decoder

_BATCH_START = 2048
_BATCH_CAP = 65536


@dataclass(frozen=True)
class SimulationPlan:
    code: codes.CyclicCode
    m_rows: int
    ad: decoder.AdConfig
    ebno_db_values: tuple[float, ...]
    min_frame_errors: int = 100
    max_frames: int = 100_000_000
    seed: int = 0
    workers: int = 1
    allow_dense: bool = False

    def __post_init__(self):
        if self.min_frame_errors < 1:
            raise ValueError("min_frame_errors must be >= 1")
        if self.max_frames < 1:
            raise ValueError("max_frames must be >= 1")
        if not self.ebno_db_values:
            raise ValueError("Eb/N0 grid is empty")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class SimulationRecord:
    ebno_db: float
    frames: int
    bit_errors: int
    frame_errors: int
    ber: float
    fer: float
    avg_iterations: float
    avg_stages: float
    lms_decisions: int
    undetected_errors: int
    stop_rule: str


_WORKER_STATE: dict = {}


def _init_worker(code, matrix, ad_cfg, seed):
    _WORKER_STATE["code"] = code
    _WORKER_STATE["graph"] = decoder.TannerGraph(matrix)
    _WORKER_STATE["ad"] = ad_cfg
    _WORKER_STATE["seed"] = seed


def _decode_range(code, graph, ad_cfg, seed, grid_index, ebno_db, lo, hi):
    cfg = channel.ChannelConfig(ebno_db=ebno_db, rate=code.rate)
    G = codes.generator_matrix(code)
    bit_errors = frame_errors = iterations = stages = lms = undetected = 0
    for f in range(lo, hi):
        rng = np.random.default_rng(np.random.SeedSequence([seed, grid_index, f]))
        u = rng.integers(0, 2, size=code.k).astype(np.uint8)
        c = (u @ G) & 1
        y = channel.transmit(channel.modulate(c), cfg, rng)
        si = channel.llr(y, cfg)
        out = decoder.ad_decode(si, graph, code, ad_cfg, y, rng)
        iterations += out.iterations
        stages += out.stages
        lms += out.selected_by_lms
        nerr = int((out.codeword ^ c).sum())
        if nerr:
            bit_errors += nerr
            frame_errors += 1
            if out.converged:
                undetected += 1
    return bit_errors, frame_errors, iterations, stages, lms, undetected


def _decode_range_pooled(args):
    grid_index, ebno_db, lo, hi = args
    return _decode_range(
        _WORKER_STATE["code"], _WORKER_STATE["graph"], _WORKER_STATE["ad"],
        _WORKER_STATE["seed"], grid_index, ebno_db, lo, hi,
    )


def run(plan: SimulationPlan, on_record=None) -> list[SimulationRecord]:
    """Simulate every grid point; the rank check aborts before any frame."""
    pcm = codes.build_parity_matrix(plan.code, plan.m_rows, allow_dense=plan.allow_dense)
    graph = decoder.TannerGraph(pcm)

    pool = None
    if plan.workers > 1:
        pool = ProcessPoolExecutor(
            max_workers=plan.workers,
            initializer=_init_worker,
            initargs=(plan.code, pcm, plan.ad, plan.seed),
        )
    try:
        records = []
        for grid_index, ebno_db in enumerate(plan.ebno_db_values):
            record = _run_point(plan, graph, pool, grid_index, float(ebno_db))
            records.append(record)
            if on_record is not None:
                on_record(record)
        return records
    finally:
        if pool is not None:
            pool.shutdown()


def _run_point(plan, graph, pool, grid_index, ebno_db) -> SimulationRecord:
    frames = 0
    totals = [0, 0, 0, 0, 0, 0]
    batch = _BATCH_START
    stop_rule = "max_frames"
    while True:
        size = min(batch, plan.max_frames - frames)
        if pool is None:
            parts = [_decode_range(
                plan.code, graph, plan.ad, plan.seed, grid_index, ebno_db,
                frames, frames + size,
            )]
        else:
            bounds = np.linspace(frames, frames + size, plan.workers + 1, dtype=int)
            tasks = [
                (grid_index, ebno_db, int(a), int(b))
                for a, b in zip(bounds[:-1], bounds[1:]) if a < b
            ]
            parts = list(pool.map(_decode_range_pooled, tasks))
        for part in parts:
            for i, v in enumerate(part):
                totals[i] += v
        frames += size
        if totals[1] >= plan.min_frame_errors:
            stop_rule = "frame_errors"
            break
        if frames >= plan.max_frames:
            break
        batch = min(batch * 2, _BATCH_CAP)
    bit_errors, frame_errors, iterations, stages, lms, undetected = totals
    return SimulationRecord(
        ebno_db=ebno_db,
        frames=frames,
        bit_errors=bit_errors,
        frame_errors=frame_errors,
        ber=bit_errors / (frames * plan.code.n),
        fer=frame_errors / frames,
        avg_iterations=iterations / frames,
        avg_stages=stages / frames,
        lms_decisions=lms,
        undetected_errors=undetected,
        stop_rule=stop_rule,
    )


def relative_complexity(code_a, code_b) -> float:
    """Ratio of per-iteration edge counts at equal row count: the codes'
    dual minimum weights divided.  Accepts CyclicCode records carrying
    dual_min_weight, or bare weights."""
    return _dual_weight(code_a) / _dual_weight(code_b)


def _dual_weight(code_or_weight) -> float:
    if isinstance(code_or_weight, codes.CyclicCode):
        if code_or_weight.dual_min_weight is None:
            raise ValueError(f"code {code_or_weight.name or ''} carries no dual minimum weight")
        return float(code_or_weight.dual_min_weight)
    value = float(code_or_weight)
    if not math.isfinite(value) or value <= 0:
        raise ValueError(f"dual minimum weight must be positive, got {value}")
    return value
