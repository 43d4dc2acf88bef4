"""Scaling benchmark for :func:`solve_full` on random terrains."""

from __future__ import annotations

import csv
import io
import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .generator import GenSpec, generate_random
from .solver import solve_full
from .terrain import COORD_LIMIT

CSV_FIELDS = ("n", "seed", "guards", "visits", "visits_per_n", "micros")
VISIT_CONSTANT = 3.0


@dataclass(frozen=True)
class BenchRow:
    n: int
    seed: int
    guards: int
    visits: int  # both passes of solve_full
    micros: int
    pass_visits: int = 0  # the larger of the right and left pass

    @property
    def visits_per_n(self) -> float:
        return self.visits / self.n

    @property
    def pass_visits_per_n(self) -> float:
        return self.pass_visits / self.n


@dataclass(frozen=True)
class SizeSummary:
    n: int
    median_micros: float
    max_visits_per_n: float
    max_pass_visits_per_n: float
    slope: float | None  # log-log slope from the previous size


def bench_spec(n: int, seed: int) -> GenSpec:
    steps = max(1, n // 2)
    return GenSpec(seed=seed, steps=steps, max_run=max(1, min(4, COORD_LIMIT // steps)), max_rise=4)


def run_cell(n: int, seed: int, backend: str = "active", repeat: int = 1) -> BenchRow:
    t = generate_random(bench_spec(n, seed))
    best = math.inf
    for _ in range(repeat):
        # drop cached classification so every repeat pays the full cost
        t.__dict__.pop("classification", None)
        start = time.perf_counter()
        sol = solve_full(t, backend=backend)
        best = min(best, time.perf_counter() - start)
    pass_visits = max(sol.extra["right"].visits, sol.extra["left"].visits)
    return BenchRow(t.n, seed, len(sol.guards), sol.visits, round(best * 1e6), pass_visits)


def run_bench(sizes, seeds_per_size: int, backend: str = "active", repeat: int = 1, jobs: int = 1) -> list[BenchRow]:
    cells = [(int(n), seed) for n in sizes for seed in range(seeds_per_size)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            futures = [pool.submit(run_cell, n, s, backend, repeat) for n, s in cells]
            return [f.result() for f in futures]
    return [run_cell(n, s, backend, repeat) for n, s in cells]


def summarize(rows: list[BenchRow]) -> list[SizeSummary]:
    by_n: dict[int, list[BenchRow]] = {}
    for r in rows:
        by_n.setdefault(r.n, []).append(r)
    out: list[SizeSummary] = []
    for n in sorted(by_n):
        group = by_n[n]
        med = statistics.median(r.micros for r in group)
        slope = None
        if out and out[-1].median_micros > 0 and med > 0:
            slope = math.log(med / out[-1].median_micros) / math.log(n / out[-1].n)
        out.append(
            SizeSummary(
                n,
                med,
                max(r.visits_per_n for r in group),
                max(r.pass_visits_per_n for r in group),
                slope,
            )
        )
    return out


def to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        w.writerow((r.n, r.seed, r.guards, r.visits, f"{r.visits_per_n:.6f}", r.micros))
    return buf.getvalue()


def format_table(summary: list[SizeSummary]) -> str:
    """Per-size table.  ``visits/n`` sums both passes; ``pass/n`` is the worst
    single pass, which is what the 3n bound covers.  Rows whose single pass
    exceeds it are flagged."""
    lines = [f"{'n':>9}  {'median_ms':>10}  {'visits/n':>8}  {'pass/n':>7}  {'slope':>6}  flag"]
    for s in summary:
        slope = "-" if s.slope is None else f"{s.slope:.3f}"
        flag = "PASS>3" if s.max_pass_visits_per_n > VISIT_CONSTANT else ""
        lines.append(
            f"{s.n:>9}  {s.median_micros / 1000:>10.3f}  {s.max_visits_per_n:>8.4f}  "
            f"{s.max_pass_visits_per_n:>7.4f}  {slope:>6}  {flag}"
        )
    return "\n".join(lines)
