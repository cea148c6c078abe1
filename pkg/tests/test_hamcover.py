import pytest

from quasicover import oracle
from quasicover.hamcover import (
    border_lengths,
    enhanced_cover_approx_border,
    enhanced_cover_exact_border,
    factor_coverage_all,
    factor_occurrences,
    k_restricted_covers,
    k_restricted_seeds,
    prefix_coverage,
)
from quasicover.lcpk import PrefKTable, pref_k
from quasicover.textcore import Text, hamming_distance

from conftest import random_text_str


def test_prefix_coverage_examples():
    t = Text.from_str("abaab")
    assert prefix_coverage(t, 0)[1] == 4  # "ab" occurs at 0 and 3
    assert prefix_coverage(t, 1)[1] == 5  # approximate starts 0, 2, 3
    for k in (0, 1, 3):
        assert prefix_coverage(t, k)[-1] == len(t)


def test_prefix_coverage_table_mismatch_errors():
    t = Text.from_str("abaab")
    with pytest.raises(ValueError):
        prefix_coverage(t, 1, PrefKTable(1, [5, 1]))
    with pytest.raises(ValueError):
        prefix_coverage(t, 1, pref_k(t, 0))


def test_factor_coverage_examples():
    t = Text.from_str("abab")
    rows = factor_coverage_all(t, 0)
    assert rows[0][1] == 4  # "ab"
    assert rows[0][3] == 4  # the full string covers itself
    assert factor_coverage_all(t, 1)[0][2] == 3  # "aba": only the occurrence at 0


def test_prefix_and_factor_match_oracle(rng):
    for trial in range(60):
        n = rng.randint(1, 18)
        s = random_text_str(rng, n, rng.choice((2, 3)),
                            wildcard_prob=0.1 if trial % 5 == 0 else 0.0)
        t = Text.from_str(s)
        k = rng.randint(0, 3)
        cov = prefix_coverage(t, k)
        rows = factor_coverage_all(t, k)
        for ell in range(1, n + 1):
            assert cov[ell - 1] == oracle.brute_coverage(t.prefix(ell), t, "hamming", k)
        for a in range(n):
            for b in range(a, n):
                want = oracle.brute_coverage(t.factor(a, b), t, "hamming", k)
                assert rows[a][b - a] == want


def test_coverage_monotone_in_k(rng):
    for _ in range(25):
        n = rng.randint(1, 15)
        t = Text.from_str(random_text_str(rng, n, 2))
        prev = factor_coverage_all(t, 0)
        for k in (1, 2):
            cur = factor_coverage_all(t, k)
            assert all(cur[a][i] >= prev[a][i]
                       for a in range(n) for i in range(n - a))
            prev = cur


def test_sweep_invariants_instrumented(rng):
    """Coverage-formula internal invariant plus the 2n-1 pair-processing bound."""
    for _ in range(30):
        n = rng.randint(1, 16)
        t = Text.from_str(random_text_str(rng, n, 2))
        k = rng.randint(0, 3)
        final_pairs = []

        def observer(ell, state):
            want = oracle.brute_coverage(t.prefix(ell), t, "hamming", k)
            assert state.sum_o + state.num_no * ell == want
            final_pairs.append(state.pairs_processed)

        prefix_coverage(t, k, observer=observer)
        assert final_pairs[-1] <= 2 * n - 1


def test_factor_occurrences_match_oracle(rng):
    for _ in range(25):
        n = rng.randint(1, 12)
        t = Text.from_str(random_text_str(rng, n, 2))
        k = rng.randint(0, 2)
        for a in range(n):
            for b in range(a, n):
                got = list(factor_occurrences(t, k, a, b))
                want = list(oracle.brute_occurrences(t.factor(a, b), t, "hamming", k))
                assert got == want


def test_k_restricted_covers_examples():
    got = k_restricted_covers(Text.from_str("abab"), 1)
    assert got["ab"] == 0 and got["a"] == 1 and got["b"] == 1
    assert all(v is None for key, v in got.items() if key not in ("ab", "a", "b"))
    got = k_restricted_covers(Text.from_str("aaaa"), 0)
    assert got == {"a": 0, "aa": 0, "aaa": 0}


def test_k_restricted_covers_at_zero_equals_exact_covers(rng):
    def exact_covers(t: Text) -> set[str]:
        out = set()
        n = len(t)
        for a in range(n):
            for b in range(a, n):
                if b - a + 1 >= n:
                    continue
                c = t.factor(a, b)
                covered = [False] * n
                for i in range(n - len(c) + 1):
                    if hamming_distance(c, t.factor(i, i + len(c) - 1)) == 0:
                        for q in range(i, i + len(c)):
                            covered[q] = True
                if all(covered):
                    out.add(c.to_str())
        return out

    for _ in range(40):
        n = rng.randint(1, 14)
        t = Text.from_str(random_text_str(rng, n, 2))
        got = {key for key, v in k_restricted_covers(t, 0).items() if v == 0}
        assert got == exact_covers(t)


def test_k_restricted_seeds_examples():
    got = k_restricted_seeds(Text.from_str("abaabaab"), 0)
    assert got["aab"] == 0
    assert got["ab"] is None  # not a 0-seed
    t = Text.from_str("ab")
    assert set(k_restricted_seeds(t, 1)) == {"a", "b"}  # length constraint
    got = k_restricted_seeds(Text.from_str("xxxx", alphabet="x"), 0)
    assert got["x"] == 0


def test_restricted_thresholds_match_oracle(rng):
    for _ in range(20):
        n = rng.randint(1, 12)
        t = Text.from_str(random_text_str(rng, n, 2))
        kmax = 3
        brute = oracle.brute_restricted_min_k(t, "hamming")
        got = k_restricted_covers(t, kmax)
        for key, v in got.items():
            want = brute[key] if brute[key] is not None and brute[key] <= kmax else None
            assert v == want
        bruteseed = oracle.brute_restricted_min_k(t, "hamming", seeds=True)
        gotseed = k_restricted_seeds(t, kmax)
        for key, v in gotseed.items():
            want = bruteseed[key] if bruteseed[key] is not None and bruteseed[key] <= kmax else None
            assert v == want


def test_factor_report():
    from quasicover.hamcover import factor_report

    t = Text.from_str("abaab")
    rep = factor_report(t, 1, 0, 1, with_occurrences=True)
    assert rep.subject == (0, 1)
    assert rep.coverage == 5
    assert list(rep.occurrences) == [(0, 1), (2, 3), (3, 4)]
    assert factor_report(t, 0, 2, 3).occurrences is None


def test_seeds_on_texts_with_wildcards(rng):
    """User wildcards compose with the padding reduction."""
    for _ in range(15):
        n = rng.randint(2, 9)
        t = Text.from_str(random_text_str(rng, n, 2, wildcard_prob=0.25))
        got = k_restricted_seeds(t, 2)
        brute = oracle.brute_restricted_min_k(t, "hamming", seeds=True)
        for key, v in got.items():
            want = brute[key] if brute[key] is not None and brute[key] <= 2 else None
            assert v == want


def test_border_lengths():
    assert border_lengths(Text.from_str("abaab")) == [2]
    assert border_lengths(Text.from_str("ab")) == []
    assert border_lengths(Text.from_str("aaa")) == [2, 1]


def test_enhanced_exact_border():
    best = enhanced_cover_exact_border(Text.from_str("abaab"), 1)
    assert best is not None
    assert (best.candidate, best.coverage) == ("ab", 5)
    assert enhanced_cover_exact_border(Text.from_str("ab"), 0) is None
    # both borders of "aaa" cover everything; ties prefer the shorter one
    best = enhanced_cover_exact_border(Text.from_str("aaa"), 0)
    assert (best.candidate, best.coverage) == ("a", 3)


def test_enhanced_exact_border_is_optimal_among_borders(rng):
    for _ in range(30):
        n = rng.randint(1, 14)
        t = Text.from_str(random_text_str(rng, n, 2))
        k = rng.randint(0, 2)
        best = enhanced_cover_exact_border(t, k)
        lengths = border_lengths(t)
        if not lengths:
            assert best is None
            continue
        want = max(oracle.brute_coverage(t.prefix(length), t, "hamming", k)
                   for length in lengths)
        assert best.coverage == want


def test_enhanced_approx_border():
    best = enhanced_cover_approx_border(Text.from_str("abab"), 0)
    assert (best.candidate, best.coverage) == ("ab", 4)
    # coverage 5 is achievable ("ab" does); the shortest achiever wins ties
    best = enhanced_cover_approx_border(Text.from_str("abaab"), 1)
    assert best.coverage == 5
    assert (best.candidate, best.start) == ("a", 0)


def test_enhanced_approx_border_against_brute(rng):
    for _ in range(25):
        n = rng.randint(1, 12)
        t = Text.from_str(random_text_str(rng, n, 2))
        k = rng.randint(0, 2)
        best = enhanced_cover_approx_border(t, k)
        # brute force over all factors that are k-approximate borders
        want = None
        for length in range(1, n + 1):
            for a in range(n - length + 1):
                c = t.factor(a, a + length - 1)
                if hamming_distance(c, t.prefix(length)) > k:
                    continue
                if hamming_distance(c, t.suffix(length)) > k:
                    continue
                cov = oracle.brute_coverage(c, t, "hamming", k)
                if want is None or cov > want:
                    want = cov
        assert best.coverage == want
        # returned candidate is itself a valid k-approximate border
        c = Text.from_str(best.candidate, t.alphabet)
        assert hamming_distance(c, t.prefix(len(c))) <= k
        assert hamming_distance(c, t.suffix(len(c))) <= k


def test_every_factor_is_border_when_budget_covers_length():
    t = Text.from_str("abcb")
    k = len(t)
    best = enhanced_cover_approx_border(t, k)
    # with k >= |C| every single-symbol factor qualifies; coverage n wins
    assert best.coverage == len(t)
    assert len(best.candidate) == 1
