"""File formats: code-spec files, weight-distribution files, and the CSV
outputs of the simulator and bound evaluator.

All numeric text is locale-independent ('.' radix); floats are written with
repr so identical runs produce identical bytes.
"""

import csv
from pathlib import Path

from . import gf2poly
from .bounds import UnionBoundResult
from .codes import CyclicCode, WeightDistribution, from_dual_idempotent
from .simulator import SimulationRecord

RESULT_COLUMNS = [
    "ebno_db", "frames", "bit_errors", "frame_errors", "ber", "fer",
    "avg_iterations", "avg_stages", "lms_decisions", "undetected_errors", "stop_rule",
]
BOUND_COLUMNS = ["ebno_db", "ber_ub", "fer_ub", "truncation_delta_max"]


def load_code(path) -> CyclicCode:
    """Parse a code-spec file; the polynomial is idempotency-checked on load."""
    fields = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected 'key: value', got {raw!r}")
        key = key.strip()
        if key in fields:
            raise ValueError(f"{path}:{lineno}: duplicate field {key!r}")
        fields[key] = value.strip()
    for required in ("n", "idual"):
        if required not in fields:
            raise ValueError(f"{path}: missing required field {required!r}")
    unknown = set(fields) - {"n", "idual", "name", "dual_min_weight"}
    if unknown:
        raise ValueError(f"{path}: unknown fields {sorted(unknown)}")
    n = int(fields["n"])
    idual = gf2poly.parse_exponents(fields["idual"], n)
    dual_min_weight = int(fields["dual_min_weight"]) if "dual_min_weight" in fields else None
    return from_dual_idempotent(
        idual, n, name=fields.get("name"), dual_min_weight=dual_min_weight,
    )


def save_code(path, code: CyclicCode) -> None:
    """Write a code-spec file that round-trips through load_code."""
    lines = []
    if code.name:
        lines.append(f"name: {code.name}")
    lines.append(f"n: {code.n}")
    lines.append(f"idual: {gf2poly.format_exponents(code.idual)}")
    if code.dual_min_weight is not None:
        lines.append(f"dual_min_weight: {code.dual_min_weight}")
    Path(path).write_text("\n".join(lines) + "\n")


def load_weight_distribution(path, n: int) -> WeightDistribution:
    """Read 'delta,count' lines into a (possibly truncated) distribution."""
    counts = [0] * (n + 1)
    seen = set()
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 'delta,count', got {raw!r}")
        delta, count = int(parts[0]), int(parts[1])
        if not 0 <= delta <= n:
            raise ValueError(f"{path}:{lineno}: weight {delta} outside [0, {n}]")
        if delta in seen:
            raise ValueError(f"{path}:{lineno}: duplicate weight {delta}")
        if count < 0:
            raise ValueError(f"{path}:{lineno}: negative count")
        seen.add(delta)
        counts[delta] = count
    if not seen:
        raise ValueError(f"{path}: no weight entries found")
    return WeightDistribution(n=n, counts=tuple(counts), truncated_at=max(seen))


def write_results_csv(path, records: list[SimulationRecord]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(RESULT_COLUMNS)
        for r in records:
            writer.writerow([
                repr(r.ebno_db), r.frames, r.bit_errors, r.frame_errors,
                repr(r.ber), repr(r.fer), repr(r.avg_iterations), repr(r.avg_stages),
                r.lms_decisions, r.undetected_errors, r.stop_rule,
            ])


def read_results_csv(path) -> list[SimulationRecord]:
    records = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != RESULT_COLUMNS:
            raise ValueError(f"{path}: unexpected results header {reader.fieldnames}")
        for row in reader:
            records.append(SimulationRecord(
                ebno_db=float(row["ebno_db"]),
                frames=int(row["frames"]),
                bit_errors=int(row["bit_errors"]),
                frame_errors=int(row["frame_errors"]),
                ber=float(row["ber"]),
                fer=float(row["fer"]),
                avg_iterations=float(row["avg_iterations"]),
                avg_stages=float(row["avg_stages"]),
                lms_decisions=int(row["lms_decisions"]),
                undetected_errors=int(row["undetected_errors"]),
                stop_rule=row["stop_rule"],
            ))
    return records


def write_bounds_csv(path, result: UnionBoundResult) -> None:
    truncation = "" if result.truncated_at is None else result.truncated_at
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(BOUND_COLUMNS)
        for p in result.points:
            writer.writerow([repr(p.ebno_db), repr(p.ber_bound), repr(p.fer_bound), truncation])


def read_bounds_csv(path) -> list[dict]:
    rows = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != BOUND_COLUMNS:
            raise ValueError(f"{path}: unexpected bounds header {reader.fieldnames}")
        for row in reader:
            rows.append({
                "ebno_db": float(row["ebno_db"]),
                "ber_ub": float(row["ber_ub"]),
                "fer_ub": float(row["fer_ub"]),
                "truncation_delta_max": (
                    None if row["truncation_delta_max"] == "" else int(row["truncation_delta_max"])
                ),
            })
    return rows
