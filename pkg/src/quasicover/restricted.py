"""Restricted approximate covers and seeds under weighted edit distance.

For a factor T[a, b], the table Q_{a,b}[i] holds the minimal threshold k at
which the factor is a k-approximate cover of T[i, n-1]; the factors with
minimal Q_{a,b}[0] are the restricted approximate covers of T.  Two engines
compute the table: a quadratic reference recurrence, and the special-point
variant that answers each entry in O(sqrt(n log n)) with binary searches on
precomputed Pareto lists plus on-line range minima over the table itself.
Seeds reduce to covers of the wildcard-padded text.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import inf

from .editcover import SpecialPointIndex, _check_index, _dp_rows, precompute_special
from .textcore import PenaltyMatrix, Text, pad_for_seed


@dataclass
class QTable:
    """Minimal cover thresholds of one factor against every text suffix."""

    a: int
    b: int
    values: list[int]

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


class IncrementalRangeMin:
    """Sparse-table range minima over values materialized right to left.

    ``build_step(i, value)`` fills every level whose window starting at i
    fits inside the index space; queries are O(1) and must only touch
    materialized indices.
    """

    def __init__(self, size: int):
        self.size = size
        levels = max(1, size.bit_length())
        self._table: list[list[int | None]] = [[None] * size for _ in range(levels)]
        self._low = size  # smallest materialized index

    def build_step(self, i: int, value: int) -> None:
        if i != self._low - 1:
            raise ValueError(f"entries must materialize right to left, got {i} after {self._low}")
        self._low = i
        table = self._table
        table[0][i] = value
        p = 1
        while i + (1 << p) - 1 < self.size:
            table[p][i] = min(table[p - 1][i], table[p - 1][i + (1 << (p - 1))])
            p += 1

    def query(self, i: int, j: int) -> int:
        if i > j:
            raise ValueError(f"empty range [{i},{j}]")
        if i < self._low or j >= self.size:
            raise ValueError(f"range [{i},{j}] touches unmaterialized indices")
        p = (j - i + 1).bit_length() - 1
        level = self._table[p]
        return min(level[i], level[j - (1 << p) + 1])


def q_table_quadratic(t: Text, a: int, b: int, p: PenaltyMatrix) -> QTable:
    """Reference recurrence: try every first occurrence T[i, j].

    The needed D_{a,i}[b, .] row is recomputed per i in O(n) space; with the
    rows given, the double loop is quadratic.
    """
    n = len(t)
    values: list[int] = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        row_b = None
        for bi, row in enumerate(_dp_rows(t, a, i, p)):
            if bi == b - a + 1:
                row_b = row
                break
        assert row_b is not None
        best = inf
        min_q = inf
        for j in range(i, n):
            min_q = min(min_q, values[j + 1])
            cand = max(row_b[j - i + 1], min_q)
            if cand < best:
                best = cand
        values[i] = best
    return QTable(a, b, values)


def q_table_fast(t: Text, a: int, b: int, p: PenaltyMatrix,
                 idx: SpecialPointIndex | None = None) -> QTable:
    """Special-point variant of the Q-table recurrence.

    Per entry: an optional scan of the short-occurrence block, then for each
    of the O(M) special split pairs a binary search on the stored Pareto
    list, guided by on-line range minima over the suffix of the table built
    so far.  Output equals :func:`q_table_quadratic` exactly.
    """
    n = len(t)
    if idx is None:
        idx = precompute_special(t, p)
    else:
        _check_index(idx, t, p)
    m = idx.M
    values: list[int] = [0] * (n + 1)
    rm = IncrementalRangeMin(n + 1)
    rm.build_step(n, 0)
    small = b - a < m - 1
    s = a + (-a) % m
    for i in range(n - 1, -1, -1):
        best = inf
        if small:
            block_row = idx.blocks[a][i][b - a + 1]
            min_q = inf
            for j in range(i, min(i + m - 1, n)):
                min_q = min(min_q, values[j + 1])
                cand = max(block_row[j - i + 1], min_q)
                if cand < best:
                    best = cand
        sp = i + (-i) % m
        for c, cp in [(s, x) for x in range(i, i + m)] + [(x, sp) for x in range(a, a + m)]:
            plist = idx.pareto(c, cp, b)
            if plist is None or len(plist) == 0:
                continue
            head = idx.blocks[a][i][c - a][cp - i]
            dists, ends = plist.dists, plist.ends

            def reachable_min(j: int) -> float:
                return rm.query(i + 1, j + 1) if j >= i else inf

            # First list entry where the running minimum dips below the
            # occurrence cost; by the domination order both sides are
            # monotone, so the overall best sits there or one step earlier.
            lo, hi = 0, len(dists) - 1
            while lo < hi:
                mid = (lo + hi) // 2
                if reachable_min(ends[mid]) <= head + dists[mid]:
                    hi = mid
                else:
                    lo = mid + 1
            for tt in (lo, lo - 1):
                if tt < 0:
                    continue
                j = ends[tt]
                if j < i:
                    continue  # empty occurrence never covers position i
                cand = max(head + dists[tt], rm.query(i + 1, j + 1))
                if cand < best:
                    best = cand
        values[i] = best
        rm.build_step(i, best)
    return QTable(a, b, values)


@dataclass
class RestrictedReport:
    """Minimal thresholds per candidate factor plus the argmin set.

    ``thresholds`` is keyed by factor string; ``occurrences`` lists every
    (a, b) realizing a string; ``minimal`` is the best threshold and
    ``argmin`` the strings achieving it (None/empty when no candidates).
    """

    thresholds: dict[str, int]
    occurrences: dict[str, list[tuple[int, int]]]
    minimal: int | None

    @property
    def argmin(self) -> list[str]:
        if self.minimal is None:
            return []
        return [key for key, v in self.thresholds.items() if v == self.minimal]


def _report_for_candidates(target: Text, p: PenaltyMatrix,
                           candidates: list[tuple[int, int]],
                           label_at: int = 0, threads: int = 1) -> RestrictedReport:
    """Q[0]-thresholds for candidate factors of ``target``.

    ``label_at`` shifts reported occurrence coordinates (used by the seed
    reduction, whose candidates live in the middle of the padded text).
    Per-factor tables are independent given the shared read-only index, so
    ``threads`` may fan them out; assembly order stays deterministic.
    """
    occurrences: dict[str, list[tuple[int, int]]] = {}
    canonical: dict[str, tuple[int, int]] = {}
    for a, b in candidates:
        key = target.factor(a, b).to_str()
        occurrences.setdefault(key, []).append((a - label_at, b - label_at))
        canonical.setdefault(key, (a, b))
    idx = precompute_special(target, p) if canonical else None

    def threshold(pair: tuple[int, int]) -> int:
        return q_table_fast(target, pair[0], pair[1], p, idx)[0]

    keys = list(canonical)
    if threads > 1 and keys:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(threshold, (canonical[k] for k in keys)))
    else:
        values = [threshold(canonical[k]) for k in keys]
    thresholds = dict(zip(keys, values))
    minimal = min(thresholds.values(), default=None)
    return RestrictedReport(thresholds, occurrences, minimal)


def restricted_covers_ed(t: Text, p: PenaltyMatrix, threads: int = 1) -> RestrictedReport:
    """Minimal cover threshold for every proper factor; argmin set reported.

    O(n sqrt(n log n)) per factor after the shared index build.
    """
    n = len(t)
    candidates = [(a, b) for a in range(n) for b in range(a, n) if b - a + 1 < n]
    return _report_for_candidates(t, p, candidates, threads=threads)


def restricted_seeds_ed(t: Text, p: PenaltyMatrix, threads: int = 1) -> RestrictedReport:
    """Minimal seed threshold for every factor with 2|C| <= |T|.

    Runs the cover machinery on the wildcard-padded text, with candidates
    drawn from the original region; reported coordinates refer to t.
    """
    n = len(t)
    padded = pad_for_seed(t)
    candidates = [(a + n, b + n) for a in range(n) for b in range(a, n)
                  if 2 * (b - a + 1) <= n]
    return _report_for_candidates(padded, p, candidates, label_at=n, threads=threads)
