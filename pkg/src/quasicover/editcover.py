"""Levenshtein and weighted-edit k-coverage.

Two engines fill the longest-approximate-prefix table P_k[a, b, a'] (the
largest b' with d(T[a,b], T[a',b']) <= k):

* unit costs: diagonal h-waves of the edit DP, advanced by a two-pointer
  over diagonals per factor row, O(n^3) overall;
* weighted costs: precomputed Pareto lists anchored at special points
  (multiples of M = floor(sqrt(n / log2 n))) plus small DP blocks, giving
  O(sqrt(n log n)) per entry.

Factor coverage is then the size of an interval union per factor.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import log2, sqrt

from . import hamcover
from .lcpk import ExactLce
from .textcore import (
    WILDCARD,
    DTable,
    PenaltyMatrix,
    Text,
    symbols_match,
)

#: Public sentinel for "no cell with this exact value on the diagonal";
#: ordered below every valid row index (valid indices start at -1).
WAVE_SENTINEL = -2

#: Internal sentinel for "diagonal has no cells" in furthest-reach waves.
_NO_DIAG = -1


class HWaves:
    """Waves L^0..L^h of the unit-cost edit DP for a string pair.

    ``entry(h, d)`` is the largest row index i with D[i, i+d] = h in the
    prefix-indexed D-table (row -1 is the empty prefix), or
    :data:`WAVE_SENTINEL` when no cell on the diagonal holds that value.
    Internally the waves are kept in furthest-reach form (largest row with
    value <= h), which is what the table queries need.
    """

    def __init__(self, t1: Text, t2: Text, h: int, frontiers: list[list[int]]):
        self.t1 = t1
        self.t2 = t2
        self.h = h
        self._frontiers = frontiers  # frontiers[g][d + g], length-based rows

    def frontier(self, h: int, d: int) -> int:
        """Furthest row (counted in consumed t1 symbols) with value <= h."""
        if abs(d) > h:
            raise IndexError(f"diagonal {d} outside wave {h}")
        return self._frontiers[h][d + h]

    def entry(self, h: int, d: int) -> int:
        if abs(d) > h:
            raise IndexError(f"diagonal {d} outside wave {h}")
        m, n2 = len(self.t1), len(self.t2)
        if not -m <= d <= n2:
            return WAVE_SENTINEL
        cur = self._frontiers[h][d + h]
        if cur == _NO_DIAG:
            return WAVE_SENTINEL
        if abs(d) <= h - 1:
            prev = self._frontiers[h - 1][d + h - 1]
        else:
            prev = max(0, -d) - 1  # one below the first row of a fresh diagonal
        return cur - 1 if cur > prev else WAVE_SENTINEL

    def wave(self, h: int) -> list[int]:
        """Wave h as [L^h(-h), ..., L^h(h)] in index-based convention."""
        return [self.entry(h, d) for d in range(-h, h + 1)]

    def lev_within(self) -> bool:
        """True iff Lev(t1, t2) <= h, read off the final cell's diagonal."""
        m, n2 = len(self.t1), len(self.t2)
        d = n2 - m
        if abs(d) > self.h:
            return False
        return self._frontiers[self.h][d + self.h] >= m


def _build_frontiers(t1: Text, t2: Text, h: int, slide) -> list[list[int]]:
    m, n2 = len(t1), len(t2)
    frontiers: list[list[int]] = []
    for g in range(h + 1):
        wave = [_NO_DIAG] * (2 * g + 1)
        for d in range(-g, g + 1):
            if not -m <= d <= n2:
                continue
            if g == 0:
                r = 0
            else:
                prev = frontiers[g - 1]
                r = _NO_DIAG
                if abs(d - 1) <= g - 1:
                    nb = prev[d - 1 + g - 1]  # insertion: row unchanged
                    if nb != _NO_DIAG:
                        r = max(r, nb)
                if abs(d) <= g - 1:
                    nb = prev[d + g - 1]  # substitution: row + 1
                    if nb != _NO_DIAG:
                        r = max(r, nb + 1)
                if abs(d + 1) <= g - 1:
                    nb = prev[d + 1 + g - 1]  # deletion: row + 1
                    if nb != _NO_DIAG:
                        r = max(r, nb + 1)
                if r == _NO_DIAG:
                    continue
            reach = min(m, n2 - d)
            r = min(r, reach)
            r += slide(r, d)
            wave[d + g] = r
        frontiers.append(wave)
    return frontiers


def _char_slide(t1: Text, t2: Text):
    m, n2 = len(t1), len(t2)

    def slide(r: int, d: int) -> int:
        reach = min(m, n2 - d)
        e = 0
        while r + e < reach and symbols_match(t1[r + e], t2[r + e + d]):
            e += 1
        return e

    return slide


def h_wave_build(t1: Text, t2: Text, h: int) -> HWaves:
    """Waves L^0..L^h for (t1, t2) under unit costs.

    Wildcards match in substitutions; insertions and deletions always cost 1.
    """
    if h < 0:
        raise ValueError("wave budget must be nonnegative")
    return HWaves(t1, t2, h, _build_frontiers(t1, t2, h, _char_slide(t1, t2)))


def h_wave_prepend(waves: HWaves, letter: int | str) -> HWaves:
    """Waves for (t1, letter + t2).

    Recomputes the wave set for the extended pair; output equality with a
    from-scratch build is the contract, and the O(h)-per-prepend incremental
    update is deliberately not implemented (see the build notes).
    """
    t2 = waves.t2
    if isinstance(letter, str):
        sym = (WILDCARD,) if letter == t2.wildcard_char else (t2.alphabet.index(letter),)
    else:
        sym = (letter,)
    new_t2 = Text(sym + t2.symbols, t2.alphabet, t2.wildcard_char)
    return h_wave_build(waves.t1, new_t2, waves.h)


def _reject_wildcards(t: Text, what: str) -> None:
    if WILDCARD in t.symbols:
        raise ValueError(
            f"{what} requires a wildcard-free text; use the weighted edit "
            "metric with unit costs for partial words")


def _suffix_pair_frontier(t: Text, a: int, ap: int, k: int,
                          lce: ExactLce) -> list[int]:
    """Top (h=k) furthest-reach wave for the pair (T[a, n-1], T[ap, n-1])."""
    n = len(t)
    m, n2 = n - a, n - ap

    def slide(r: int, d: int) -> int:
        reach = min(m, n2 - d)
        return min(lce.extension(a + r, ap + r + d), reach - r)

    return _build_frontiers(t.factor(a, n - 1), t.factor(ap, n - 1), k, slide)[k]


class LevPrefixTable:
    """Dense P_k table under the Levenshtein distance.

    ``get(a, b, ap)`` is the largest b' >= ap-1 with Lev(T[a,b], T[ap,b'])
    <= k, or -1.  Dense storage: meant for moderate n (tests, API); factor
    coverage streams the same values without materializing them.
    """

    def __init__(self, n: int, k: int, data: list[list[list[int]]]):
        self.n = n
        self.k = k
        self._data = data

    def get(self, a: int, b: int, ap: int) -> int:
        return self._data[a][b - a][ap]


def p_lev_table(t: Text, k: int) -> LevPrefixTable:
    """P_k under Levenshtein for all (a, b, a'), O(n^3).

    Outer loop over a', inner over a descending; the wave pair is stored in
    the orientation that receives the prepended letter and queried through
    the transposition identity F'(d) = F(-d) - d.
    """
    _reject_wildcards(t, "the Levenshtein wave engine")
    if k < 0:
        raise ValueError("budget must be nonnegative")
    n = len(t)
    data = [[[-1] * n for _ in range(n - a)] for a in range(n)]
    for ap in range(n - 1, -1, -1):
        waves = h_wave_build(t.factor(ap, n - 1), t.factor(n - 1, n - 1), k)
        for a in range(n - 1, -1, -1):
            if a < n - 1:
                waves = h_wave_prepend(waves, t[a])
            # Transpose: stored pair is (T[ap..], T[a..]).
            ft = [0] * (2 * k + 1)
            for d in range(-k, k + 1):
                src = waves._frontiers[k][-d + k] if abs(d) <= k else _NO_DIAG
                ft[d + k] = src - d if src != _NO_DIAG else _NO_DIAG
            d = k
            row = data[a]
            for b in range(a, n):
                i = b - a + 1
                while d >= -k and (ft[d + k] == _NO_DIAG or ft[d + k] < i):
                    d -= 1
                if d < -k:
                    break  # stays -1 for this and all longer factors
                row[b - a][ap] = ap + i + d - 1
    return LevPrefixTable(n, k, data)


@dataclass(frozen=True)
class ParetoList:
    """Non-dominated (distance, end) pairs of one D-table row, both ascending."""

    dists: tuple[int, ...]
    ends: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.dists)

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.dists, self.ends))

    def pred(self, x: int) -> tuple[int, int] | None:
        """Maximal pair with distance <= x, or None (the infinity sentinel)."""
        idx = bisect_right(self.dists, x) - 1
        if idx < 0:
            return None
        return self.dists[idx], self.ends[idx]


def pareto_list_build(costs: list[int], first_end: int) -> ParetoList:
    """Stack filter keeping the maximal (cost, end) pairs of one row.

    ``costs[t]`` is the distance for end position ``first_end + t``; a pair
    survives iff no later pair has an equal or smaller cost.
    """
    dists: list[int] = []
    ends: list[int] = []
    for offset, d in enumerate(costs):
        while dists and dists[-1] >= d:
            dists.pop()
            ends.pop()
        dists.append(d)
        ends.append(first_end + offset)
    return ParetoList(tuple(dists), tuple(ends))


def pareto_list_from_row(dt: DTable, b: int) -> ParetoList:
    return pareto_list_build(dt.row(b), dt.ap - 1)


def block_size(n: int) -> int:
    """M = floor(sqrt(n / log2 n)), clamped to at least 1."""
    if n <= 2:
        return 1
    return max(1, int(sqrt(n / log2(n))))


class SpecialPointIndex:
    """Precomputed structures for sub-quartic weighted-edit prefix queries.

    Holds (a) Pareto lists of every D-table row whose suffix pair touches a
    special point (a multiple of M), and (b) the M x M leading block of
    every D-table, boundary row and column included.
    """

    def __init__(self, text: Text, penalty: PenaltyMatrix, m: int,
                 blocks: list[list[list[list[int]]]],
                 lists: dict[tuple[int, int], list[ParetoList]]):
        self.text = text
        self.penalty = penalty
        self.M = m
        self.blocks = blocks
        self.lists = lists

    def block_entry(self, a: int, ap: int, b: int, bp: int) -> int:
        """D_{a,ap}[b, bp] for -1 <= b-a, bp-ap < M-1."""
        return self.blocks[a][ap][b - a + 1][bp - ap + 1]

    def pareto(self, c: int, cp: int, b: int) -> ParetoList | None:
        """L_{c,cp}[b], or None when the list is empty or not stored."""
        rows = self.lists.get((c, cp))
        if rows is None or b < c - 1:
            return None
        return rows[b - c + 1]


def _dp_rows(t: Text, a: int, ap: int, p: PenaltyMatrix):
    """Yield rows b = a-1 .. n-1 of D_{a,ap} one at a time."""
    n = len(t)
    width = n - ap + 1
    row = [0] * width
    for j in range(1, width):
        row[j] = row[j - 1] + p.ins_cost(t[ap + j - 1])
    yield row
    for b in range(a, n):
        tb = t[b]
        new = [row[0] + p.del_cost(tb)] + [0] * (width - 1)
        for j in range(1, width):
            tj = t[ap + j - 1]
            new[j] = min(row[j - 1] + p.sub_cost(tb, tj),
                         new[j - 1] + p.ins_cost(tj),
                         row[j] + p.del_cost(tb))
        row = new
        yield row


def precompute_special(t: Text, p: PenaltyMatrix) -> SpecialPointIndex:
    """Build the special-point index: O(n^4 / M) list work, O(n^2 M^2) blocks."""
    n = len(t)
    m = block_size(n)
    # (b) leading blocks of every D_{a, ap}, boundary row/column included.
    blocks: list[list[list[list[int]]]] = []
    for a in range(n + 1):
        per_a = []
        for ap in range(n + 1):
            rows: list[list[int]] = []
            width = min(m, n - ap + 1)
            height = min(m, n - a + 1)
            row = [0] * width
            for j in range(1, width):
                row[j] = row[j - 1] + p.ins_cost(t[ap + j - 1])
            rows.append(row)
            for i in range(1, height):
                tb = t[a + i - 1]
                new = [rows[i - 1][0] + p.del_cost(tb)] + [0] * (width - 1)
                for j in range(1, width):
                    tj = t[ap + j - 1]
                    new[j] = min(rows[i - 1][j - 1] + p.sub_cost(tb, tj),
                                 new[j - 1] + p.ins_cost(tj),
                                 rows[i - 1][j] + p.del_cost(tb))
                rows.append(new)
            per_a.append(rows)
        blocks.append(per_a)
    # (a) Pareto lists for pairs touching a special point.  Sides equal to n
    # are stored with their boundary content (the empty-suffix column/row):
    # splits of the form ed(X, eps) + ed(eps, Y) land exactly there, so
    # treating those lists as empty loses last-position answers.
    lists: dict[tuple[int, int], list[ParetoList]] = {}
    for c in range(n + 1):
        for cp in range(n + 1):
            if c % m != 0 and cp % m != 0:
                continue
            plists = [pareto_list_build(row, cp - 1)
                      for row in _dp_rows(t, c, cp, p)]
            lists[(c, cp)] = plists
    return SpecialPointIndex(t, p, m, blocks, lists)


def _check_index(idx: SpecialPointIndex, t: Text, p: PenaltyMatrix) -> None:
    if idx.text != t or idx.penalty != p:
        raise ValueError("special-point index was built for a different text or penalty matrix")


def p_ed_entry(idx: SpecialPointIndex, a: int, b: int, ap: int, k: int) -> int:
    """P_k[a, b, ap] under the weighted edit metric, via the index.

    Short factors scan their small block directly; every longer target is
    split at a special point, where the stored Pareto list answers a
    predecessor query on the remaining budget.
    """
    n = len(idx.text)
    m = idx.M
    res = -1
    if b - a < m - 1:
        block_row = idx.blocks[a][ap][b - a + 1]
        for bp in range(ap - 1, min(ap + m - 1, n)):
            if block_row[bp - ap + 1] <= k:
                res = bp
    s = a + (-a) % m
    sp = ap + (-ap) % m
    cands = [(s, cp) for cp in range(ap, ap + m)]
    cands += [(c, sp) for c in range(a, a + m)]
    for c, cp in cands:
        plist = idx.pareto(c, cp, b)
        if plist is None:
            continue
        head = idx.blocks[a][ap][c - a][cp - ap]  # D_{a,ap}[c-1, cp-1]
        found = plist.pred(k - head)
        if found is not None:
            res = max(res, found[1])
    return res


def _union_accumulate(cov_reach: list[int], ap: int, bp: int) -> None:
    """Extend one factor's running interval union with [ap, bp]."""
    if bp >= ap:
        reach = cov_reach[1]
        if bp > reach:
            cov_reach[0] += bp - max(reach, ap - 1)
            cov_reach[1] = bp


def _factor_coverage_lev(t: Text, k: int, lce: ExactLce | None = None) -> list[list[int]]:
    _reject_wildcards(t, "Levenshtein factor coverage")
    n = len(t)
    if lce is None:
        lce = ExactLce(t)
    rows: list[list[int]] = []
    for a in range(n):
        acc = [[0, -1] for _ in range(n - a)]  # per b: [union size, reach]
        for ap in range(n):
            ft = _suffix_pair_frontier(t, a, ap, k, lce)
            d = k
            for b in range(a, n):
                i = b - a + 1
                while d >= -k and (ft[d + k] == _NO_DIAG or ft[d + k] < i):
                    d -= 1
                if d < -k:
                    break
                _union_accumulate(acc[b - a], ap, ap + i + d - 1)
        rows.append([size for size, _ in acc])
    return rows


def _factor_coverage_edit(t: Text, k: int, p: PenaltyMatrix,
                          idx: SpecialPointIndex | None = None) -> list[list[int]]:
    n = len(t)
    if idx is None:
        idx = precompute_special(t, p)
    else:
        _check_index(idx, t, p)
    rows: list[list[int]] = []
    for a in range(n):
        row = []
        for b in range(a, n):
            acc = [0, -1]
            for ap in range(n):
                _union_accumulate(acc, ap, p_ed_entry(idx, a, b, ap, k))
            row.append(acc[0])
        rows.append(row)
    return rows


def factor_coverage(t: Text, metric: str, k: int, p: PenaltyMatrix | None = None,
                    idx: SpecialPointIndex | None = None) -> list[list[int]]:
    """k-coverage of every factor: rows[a][b-a] covers T[a, b].

    Dispatches on the metric: Hamming uses the linear sweeps, Levenshtein
    the wave engine (O(n^3)), weighted edit the special-point index
    (O(n^3 sqrt(n log n))).
    """
    if metric == "hamming":
        return hamcover.factor_coverage_all(t, k)
    if metric == "levenshtein":
        return _factor_coverage_lev(t, k)
    if metric == "edit":
        if p is None:
            raise ValueError("edit metric requires a penalty matrix")
        return _factor_coverage_edit(t, k, p, idx)
    raise ValueError(f"unknown metric {metric!r}")


def _p_row_direct(t: Text, a: int, b_max: int, ap: int, p: PenaltyMatrix,
                  k: int) -> list[int]:
    """P_k[a, b, ap] for b = a..b_max by one DP pass; O(n^2) per pair."""
    out = []
    for b, row in enumerate(_dp_rows(t, a, ap, p)):
        if b == 0:
            continue  # boundary row b = a-1
        best = -1
        for j, val in enumerate(row):
            if val <= k:
                best = ap - 1 + j
        out.append(best)
        if a + b - 1 >= b_max:
            break
    return out


def prefix_coverage(t: Text, metric: str, k: int,
                    p: PenaltyMatrix | None = None) -> list[int]:
    """k-coverage of every prefix; entry ell-1 is for length ell.

    The prefix-only variants avoid the all-factors precomputation: direct
    DP rows for weighted costs, per-pair waves for Levenshtein.
    """
    n = len(t)
    if metric == "hamming":
        return hamcover.prefix_coverage(t, k)
    acc = [[0, -1] for _ in range(n)]
    if metric == "levenshtein":
        _reject_wildcards(t, "Levenshtein prefix coverage")
        lce = ExactLce(t)
        for ap in range(n):
            ft = _suffix_pair_frontier(t, 0, ap, k, lce)
            d = k
            for b in range(n):
                i = b + 1
                while d >= -k and (ft[d + k] == _NO_DIAG or ft[d + k] < i):
                    d -= 1
                if d < -k:
                    break
                _union_accumulate(acc[b], ap, ap + i + d - 1)
    elif metric == "edit":
        if p is None:
            raise ValueError("edit metric requires a penalty matrix")
        for ap in range(n):
            for b, bp in enumerate(_p_row_direct(t, 0, n - 1, ap, p, k)):
                _union_accumulate(acc[b], ap, bp)
    else:
        raise ValueError(f"unknown metric {metric!r}")
    return [size for size, _ in acc]
