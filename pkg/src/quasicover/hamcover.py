"""Hamming-distance quasiperiodicity: coverage sweeps, restricted covers and
seeds, and both enhanced-cover variants.

The core is a linear sweep over subject lengths.  Live occurrence starts sit
in a doubly linked list; adjacent pairs are split into overlapping pairs
(tracked only as a gap sum) and non-overlapping pairs (bucketed by gap), so
that at every length the covered-position count is ``sum of overlapping gaps
+ number of non-overlapping pairs * length``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .lcpk import ExactLce, LcpKTable, PrefKTable, lcp_k_all_pairs, pref_k
from .textcore import IntervalSet, Text, pad_for_seed


@dataclass
class CoverageReport:
    """Coverage of one subject: a prefix length or a factor (a, b)."""

    subject: int | tuple[int, int]
    coverage: int
    occurrences: IntervalSet | None = None


@dataclass
class EnhancedCover:
    """Best enhanced-cover candidate with its location and coverage."""

    candidate: str
    start: int
    end: int
    coverage: int


class SweepState:
    """Mutable state of one coverage sweep; single-owner while sweeping.

    Exposes the aggregates needed by the coverage formula plus a processed
    pair counter, so tests can assert the internal invariants step by step.
    """

    def __init__(self, vals: list[int], n: int):
        # Node x represents position x-1; node 0 is the left sentinel (a
        # virtual position that never counts as an occurrence) and node n+1
        # is the right sentinel for position n.
        self.n = n
        self.nxt = list(range(1, n + 3))
        self.prv = list(range(-1, n + 2))
        self.gap_of = [0] * (n + 2)
        self.is_no = [False] * (n + 2)
        self.buckets: list[set[int] | None] = [None] * (n + 1)
        self.sum_o = 0
        self.num_no = 0
        self.pairs_processed = 0
        self.removal_bucket: list[list[int]] = [[] for _ in range(n + 1)]
        for i, v in enumerate(vals):
            if v <= n:
                self.removal_bucket[v].append(i)
        for i in range(n):  # initial adjacent pairs (i, i+1), threshold 1
            self._insert_pair(i + 1, 1, 1)

    def _bucket(self, gap: int) -> set[int]:
        b = self.buckets[gap]
        if b is None:
            b = self.buckets[gap] = set()
        return b

    def _insert_pair(self, node: int, gap: int, ell: int) -> None:
        if node == 0:
            return  # left-sentinel pairs are never counted
        self.pairs_processed += 1
        self.gap_of[node] = gap
        if gap < ell:
            self.sum_o += gap
            self.is_no[node] = False
        else:
            self._bucket(gap).add(node)
            self.num_no += 1
            self.is_no[node] = True

    def _remove_pair(self, node: int) -> None:
        if node == 0:
            return
        gap = self.gap_of[node]
        if self.is_no[node]:
            self._bucket(gap).discard(node)
            self.num_no -= 1
            self.is_no[node] = False
        else:
            self.sum_o -= gap
        self.gap_of[node] = 0

    def remove_position(self, pos: int, ell: int) -> None:
        node = pos + 1
        left, right = self.prv[node], self.nxt[node]
        self._remove_pair(left)
        self._remove_pair(node)
        self.nxt[left] = right
        self.prv[right] = left
        self._insert_pair(left, (right - 1) - (left - 1), ell)

    def migrate(self, gap: int) -> None:
        """Move every stored pair with this gap into the overlapping side."""
        bucket = self.buckets[gap]
        if not bucket:
            return
        for node in bucket:
            self.is_no[node] = False
            self.num_no -= 1
            self.sum_o += gap
        bucket.clear()

    def step(self, ell: int) -> int:
        """Advance to subject length ell and return its coverage."""
        for pos in self.removal_bucket[ell - 1]:
            self.remove_position(pos, ell)
        if ell >= 2:
            self.migrate(ell - 1)
        return self.sum_o + self.num_no * ell


def coverage_sweep(vals: list[int], n: int, max_len: int,
                   observer: Callable[[int, SweepState], None] | None = None) -> list[int]:
    """Coverage for subject lengths 1..max_len given per-position live lengths.

    ``vals[i]`` is the largest subject length for which position i still is
    an approximate occurrence start (a PREF_k value or an lcp_k table row).
    O(n) overall: at most 2n-1 adjacent pairs exist over the whole sweep.
    """
    state = SweepState(vals, n)
    out = []
    for ell in range(1, max_len + 1):
        out.append(state.step(ell))
        if observer is not None:
            observer(ell, state)
    return out


def prefix_coverage(t: Text, k: int, pref: PrefKTable | None = None,
                    observer: Callable[[int, SweepState], None] | None = None) -> list[int]:
    """Hamming k-coverage of every prefix; entry ell-1 is for length ell.

    Linear in |t| once the PREF_k table is available.
    """
    n = len(t)
    if pref is None:
        pref = pref_k(t, k)
    if len(pref) != n:
        raise ValueError(f"PREF table length {len(pref)} does not match text length {n}")
    if pref.k != k:
        raise ValueError(f"PREF table was built for k={pref.k}, queried with k={k}")
    return coverage_sweep(list(pref.values), n, n, observer)


def _factor_coverage_rows(t: Text, k: int, starts: list[int],
                          table: LcpKTable | None = None) -> dict[int, list[int]]:
    if table is None:
        table = lcp_k_all_pairs(t, k)
    n = len(t)
    return {a: coverage_sweep(table.row(a), n, n - a) for a in starts}


def factor_coverage_all(t: Text, k: int,
                        table: LcpKTable | None = None) -> list[list[int]]:
    """Hamming k-coverage of every factor: rows[a][b-a] covers T[a, b].

    One prefix-style sweep per start against the matching lcp_k table row,
    O(n^2) total.
    """
    n = len(t)
    rows = _factor_coverage_rows(t, k, list(range(n)), table)
    return [rows[a] for a in range(n)]


def factor_occurrences(t: Text, k: int, a: int, b: int,
                       table: LcpKTable | None = None) -> IntervalSet:
    """Approximate occurrence intervals of T[a, b], in start order."""
    if table is None:
        table = lcp_k_all_pairs(t, k)
    length = b - a + 1
    row = table.row(a)
    occ = IntervalSet()
    for i, v in enumerate(row):
        if v >= length:
            occ.add(i, i + length - 1)
    return occ


def factor_report(t: Text, k: int, a: int, b: int,
                  with_occurrences: bool = False,
                  table: LcpKTable | None = None) -> CoverageReport:
    """Coverage report for one factor, optionally with its occurrence set."""
    if table is None:
        table = lcp_k_all_pairs(t, k)
    cov = coverage_sweep(table.row(a), len(t), b - a + 1)[b - a]
    occ = factor_occurrences(t, k, a, b, table) if with_occurrences else None
    return CoverageReport((a, b), cov, occ)


def _candidate_map(t: Text, pairs: list[tuple[int, int]]) -> dict[str, tuple[int, int]]:
    """Leftmost occurrence per distinct factor string, insertion-ordered."""
    out: dict[str, tuple[int, int]] = {}
    for a, b in pairs:
        key = t.factor(a, b).to_str()
        if key not in out:
            out[key] = (a, b)
    return out


def k_restricted_covers(t: Text, k: int) -> dict[str, int | None]:
    """Minimal ell <= k making each proper factor an ell-approximate cover.

    Factors are keyed by string content; the value is None when no budget up
    to k suffices.  Coverage is monotone in the budget, so the first level
    reaching full coverage is minimal.
    """
    n = len(t)
    pairs = [(a, b) for a in range(n) for b in range(a, n) if b - a + 1 < n]
    candidates = _candidate_map(t, pairs)
    result: dict[str, int | None] = {key: None for key in candidates}
    unresolved = set(candidates)
    for ell in range(k + 1):
        if not unresolved:
            break
        rows = factor_coverage_all(t, ell)
        for key in list(unresolved):
            a, b = candidates[key]
            if rows[a][b - a] == n:
                result[key] = ell
                unresolved.discard(key)
    return result


def k_restricted_seeds(t: Text, k: int) -> dict[str, int | None]:
    """Minimal ell <= k making each factor with 2|C| <= |T| an ell-approximate seed.

    Seeds of T are exactly covers of the wildcard-padded text, so the cover
    sweep runs there, with candidates drawn from the middle (original) region.
    """
    n = len(t)
    padded = pad_for_seed(t)
    pairs = [(a, b) for a in range(n) for b in range(a, n) if 2 * (b - a + 1) <= n]
    candidates = _candidate_map(t, pairs)
    result: dict[str, int | None] = {key: None for key in candidates}
    unresolved = set(candidates)
    starts = sorted({a + n for a, _ in candidates.values()})
    target = len(padded)
    for ell in range(k + 1):
        if not unresolved:
            break
        rows = _factor_coverage_rows(padded, ell, starts)
        for key in list(unresolved):
            a, b = candidates[key]
            if rows[a + n][b - a] == target:
                result[key] = ell
                unresolved.discard(key)
    return result


def failure_function(t: Text) -> list[int]:
    """Classic border array over exact symbol identity."""
    n = len(t)
    pi = [0] * n
    k = 0
    for q in range(1, n):
        while k > 0 and t[k] != t[q]:
            k = pi[k - 1]
        if t[k] == t[q]:
            k += 1
        pi[q] = k
    return pi


def border_lengths(t: Text) -> list[int]:
    """Lengths of all nonempty proper borders, longest first."""
    if len(t) == 0:
        return []
    pi = failure_function(t)
    out = []
    b = pi[-1]
    while b > 0:
        out.append(b)
        b = pi[b - 1]
    return out


def enhanced_cover_exact_border(t: Text, k: int,
                                pref: PrefKTable | None = None) -> EnhancedCover | None:
    """Best proper border by Hamming k-coverage; None when t has no border.

    Ties prefer the shorter border.  Border detection is exact (symbol
    identity); only the occurrences are approximate.
    """
    lengths = border_lengths(t)
    if not lengths:
        return None
    cov = prefix_coverage(t, k, pref)
    best: EnhancedCover | None = None
    for length in sorted(lengths):
        c = cov[length - 1]
        if best is None or c > best.coverage:
            best = EnhancedCover(t.prefix(length).to_str(), 0, length - 1, c)
    return best


def enhanced_cover_approx_border(t: Text, k: int,
                                 table: LcpKTable | None = None) -> EnhancedCover | None:
    """Best factor that is a k-approximate border, by Hamming k-coverage.

    A factor C qualifies when both Ham(C, prefix of |C|) <= k and
    Ham(C, suffix of |C|) <= k; both conditions are lcp_k lookups.  Ties
    prefer shorter candidates, then smaller start positions.
    """
    n = len(t)
    if n == 0:
        return None
    if table is None:
        table = lcp_k_all_pairs(t, k)
    rows = factor_coverage_all(t, k, table)
    best: EnhancedCover | None = None
    for length in range(1, n + 1):
        for a in range(n - length + 1):
            if table.entry(0, a) < length:
                continue
            if table.entry(a, n - length) < length:
                continue
            c = rows[a][length - 1]
            if best is None or c > best.coverage:
                best = EnhancedCover(t.factor(a, a + length - 1).to_str(),
                                     a, a + length - 1, c)
    return best
