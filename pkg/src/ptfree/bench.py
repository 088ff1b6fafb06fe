"""Benchmark harness: solve MWIS on every instance of a corpus directory."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import InvariantViolation, NotPtFree, ParseError
from .graph import parse_instance
from .mwis import find_mis

WORKERS_ENV = "PTFREE_WORKERS"


def _run_one(path: str, t: int, repetitions: int) -> dict:
    row = {"instance": Path(path).name}
    try:
        inst = parse_instance(Path(path).read_text())
    except (ParseError, OSError) as exc:
        row.update(status="parse_error", error=str(exc))
        return row
    g = inst.graph
    row.update(n=g.n, m=g.m)
    times = []
    try:
        for _ in range(max(repetitions, 1)):
            start = time.perf_counter()
            sol, stats = find_mis(g, None, inst.weights, t)
            times.append((time.perf_counter() - start) * 1000.0)
    except NotPtFree as exc:
        row.update(status="not_pt_free", certificate=[v + 1 for v in exc.certificate])
        return row
    except InvariantViolation as exc:
        row.update(status="invariant_violation", error=str(exc))
        return row
    row.update(
        status="ok",
        weight=sol.weight,
        calls=stats.calls,
        leaves=stats.leaves,
        max_depth=stats.max_depth,
        time_ms=round(min(times), 3),
    )
    return row


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def bench(corpus: str | Path, t: int = 5, repetitions: int = 1) -> dict:
    """One row per ``*.col`` file (sorted by name) plus a summary; failing
    instances are flagged in their row and the rest still run."""
    files = sorted(str(p) for p in Path(corpus).glob("*.col"))
    workers = min(worker_count(), max(len(files), 1))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            rows = list(pool.map(_run_one, files, [t] * len(files), [repetitions] * len(files)))
    else:
        rows = [_run_one(f, t, repetitions) for f in files]
    ok = [r for r in rows if r["status"] == "ok"]
    summary = {
        "instances": len(rows),
        "solved": len(ok),
        "failed": len(rows) - len(ok),
        "total_calls": sum(r["calls"] for r in ok),
        "max_calls": max((r["calls"] for r in ok), default=0),
        "max_depth": max((r["max_depth"] for r in ok), default=0),
        "total_time_ms": round(sum(r["time_ms"] for r in ok), 3),
    }
    return {"t": t, "repetitions": repetitions, "rows": rows, "summary": summary}
