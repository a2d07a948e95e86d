"""Runtime sweep over planted random networks.

Each configuration ``(n, tau, tau_plus)`` is measured over ``reps`` freshly
generated networks. Rows go to a CSV with header ``n,tau,tau_plus,strategy,rep,ms``.
"""

from __future__ import annotations

import csv
import logging
import statistics
import time
from dataclasses import astuple, dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .config import Limits
from .constants import BENCH_CSV_HEADER, Strategy
from .graph.digraph import derive
from .netgen import GenSpec, generate
from .pfvs.order import compatible_order
from .solver import fixed_points, fixed_points_basic, solve

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BenchRow:
    n: int
    tau: int
    tau_plus: int
    strategy: str
    rep: int
    ms: float


def _time_planted(spec: GenSpec, strategy: Strategy, limits: Limits | None) -> float:
    planted = generate(spec, limits)
    net = planted.network
    start = time.perf_counter()
    if strategy is Strategy.BASIC:
        fixed_points_basic(net, planted.pfvs, limits=limits)
    else:
        pi = compatible_order(derive(net), planted.fvs, planted.pfvs)
        fixed_points(net, planted.fvs, planted.pfvs, pi, limits=limits)
    return (time.perf_counter() - start) * 1000.0


def _time_heuristic(spec: GenSpec, strategy: Strategy, limits: Limits | None) -> float:
    net = generate(spec, limits).network
    start = time.perf_counter()
    solve(net, strategy, limits=limits)
    return (time.perf_counter() - start) * 1000.0


def run_bench(
    sizes: Sequence[int],
    taus: Sequence[int],
    tau_pluses: Sequence[int],
    reps: int,
    strategy: Strategy = Strategy.SCHEDULED,
    fanin: int = 3,
    seed: int = 0,
    planted_sets: bool = True,
    limits: Limits | None = None,
) -> list[BenchRow]:
    """Time the solver over the grid ``sizes x taus x tau_pluses``.

    Configurations with ``tau_plus > tau`` or ``2 * tau > n`` are skipped.

    Args:
        planted_sets: Enumerate with the planted ``F`` and ``P`` (isolates the
            exponential part); otherwise run the full pipeline
    """
    strategy = Strategy(strategy)
    timer = _time_planted if planted_sets else _time_heuristic
    rows: list[BenchRow] = []
    for n in sizes:
        for tau in taus:
            for tau_plus in tau_pluses:
                if tau_plus > tau or 2 * tau > n:
                    logger.info("Skipping n=%d tau=%d tau+=%d", n, tau, tau_plus)
                    continue
                for rep in range(reps):
                    spec = GenSpec(
                        n=n, tau=tau, tau_plus=tau_plus, fanin=fanin, seed=seed + rep
                    )
                    ms = timer(spec, strategy, limits)
                    rows.append(BenchRow(n, tau, tau_plus, strategy.value, rep, ms))
                logger.info("n=%d tau=%d tau+=%d done (%d reps)", n, tau, tau_plus, reps)
    return rows


def write_csv(rows: Iterable[BenchRow], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(BENCH_CSV_HEADER)
        for row in rows:
            n, tau, tau_plus, strategy, rep, ms = astuple(row)
            writer.writerow([n, tau, tau_plus, strategy, rep, f"{ms:.3f}"])


def read_csv(path: str | Path) -> list[BenchRow]:
    with open(path, newline="", encoding="utf-8") as handle:
        return [
            BenchRow(
                int(r["n"]),
                int(r["tau"]),
                int(r["tau_plus"]),
                r["strategy"],
                int(r["rep"]),
                float(r["ms"]),
            )
            for r in csv.DictReader(handle)
        ]


def mean_times(rows: Iterable[BenchRow]) -> dict[tuple[int, int, int, str], float]:
    """Mean milliseconds per ``(n, tau, tau_plus, strategy)``."""
    groups: dict[tuple[int, int, int, str], list[float]] = {}
    for row in rows:
        groups.setdefault((row.n, row.tau, row.tau_plus, row.strategy), []).append(row.ms)
    return {key: statistics.fmean(values) for key, values in sorted(groups.items())}


def fit_exponent(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Slope of the least-squares line through ``(log x, log y)``."""
    if len(xs) != len(ys) or len(xs) < 2:
        raise ValueError("need at least two matching points")
    log_x = np.log(np.asarray(xs, dtype=float))
    log_y = np.log(np.asarray(ys, dtype=float))
    slope, _ = np.polyfit(log_x, log_y, 1)
    return float(slope)
