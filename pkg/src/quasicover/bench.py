"""Scaling checks for the main engines.

Each task times one algorithm at a size n and at 2n and reports the ratio,
which a doubling of the input should keep near 2^(growth order).  Timings
take the best of several runs to damp scheduler noise; they remain soft
evidence, not proofs.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import log2

from .editcover import factor_coverage
from .hamcover import coverage_sweep, factor_coverage_all
from .lcpk import ExactLce, pref_k
from .restricted import q_table_fast, q_table_quadratic
from .textcore import PenaltyMatrix, Text
from .editcover import precompute_special


@dataclass
class BenchResult:
    task: str
    n_small: int
    n_big: int
    seconds_small: float
    seconds_big: float
    ratio: float
    bound: float | None  # expected ratio ceiling, None for informational rows

    @property
    def exponent(self) -> float:
        return log2(self.ratio) if self.ratio > 0 else 0.0

    @property
    def within_bound(self) -> bool | None:
        if self.bound is None:
            return None
        return self.ratio <= self.bound


def random_text(n: int, sigma: int = 2, seed: int = 0) -> Text:
    rng = random.Random(seed)
    alphabet = "abcd"[:sigma]
    return Text.from_str("".join(rng.choice(alphabet) for _ in range(n)), alphabet)


def _best_of(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_prefix_sweep(n: int = 2 ** 15, k: int = 1, repeats: int = 3,
                       seed: int = 7) -> BenchResult:
    """Linear-time prefix coverage, excluding PREF_k construction."""
    times = []
    for size in (n, 2 * n):
        t = random_text(size, 2, seed)
        vals = list(pref_k(t, k, ExactLce(t)).values)
        times.append(_best_of(lambda: coverage_sweep(vals, size, size), repeats))
    return BenchResult("prefix-coverage-sweep", n, 2 * n, times[0], times[1],
                       times[1] / times[0], bound=3.0)


def bench_factor_hamming(n: int = 160, k: int = 1, repeats: int = 3,
                         seed: int = 8) -> BenchResult:
    """Quadratic all-factor Hamming coverage, lcp table included."""
    times = []
    for size in (n, 2 * n):
        t = random_text(size, 2, seed)
        times.append(_best_of(lambda: factor_coverage_all(t, k), repeats))
    return BenchResult("factor-coverage-hamming", n, 2 * n, times[0], times[1],
                       times[1] / times[0], bound=5.0)


def bench_factor_lev(n: int = 28, k: int = 1, repeats: int = 3,
                     seed: int = 9) -> BenchResult:
    """Cubic all-factor Levenshtein coverage at small n."""
    times = []
    for size in (n, 2 * n):
        t = random_text(size, 2, seed)
        times.append(_best_of(lambda: factor_coverage(t, "levenshtein", k), repeats))
    return BenchResult("factor-coverage-levenshtein", n, 2 * n, times[0], times[1],
                       times[1] / times[0], bound=9.0)


def bench_qtable_crossover(n: int = 24, seed: int = 10) -> tuple[float, float]:
    """Total Q-table time over all factors: quadratic route vs fast route.

    Informational: reports (quadratic_seconds, fast_seconds) including the
    index build for the fast route.
    """
    t = random_text(n, 2, seed)
    p = PenaltyMatrix.unit(t.alphabet)
    factors = [(a, b) for a in range(n) for b in range(a, n)]
    start = time.perf_counter()
    for a, b in factors:
        q_table_quadratic(t, a, b, p)
    quad = time.perf_counter() - start
    start = time.perf_counter()
    idx = precompute_special(t, p)
    for a, b in factors:
        q_table_fast(t, a, b, p, idx)
    fast = time.perf_counter() - start
    return quad, fast


def run_all(quick: bool = False) -> list[BenchResult]:
    if quick:
        return [
            bench_prefix_sweep(n=2 ** 12, repeats=2),
            bench_factor_hamming(n=64, repeats=2),
            bench_factor_lev(n=16, repeats=2),
        ]
    return [
        bench_prefix_sweep(),
        bench_factor_hamming(),
        bench_factor_lev(),
    ]
