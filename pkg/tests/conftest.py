"""Shared generators and reference helpers for the test suite."""

from __future__ import annotations

import random

import pytest

from quasicover.textcore import PenaltyMatrix, Text, symbols_match


def random_text_str(rng: random.Random, n: int, sigma: int = 2,
                    wildcard_prob: float = 0.0) -> str:
    alphabet = "abcd"[:sigma]
    out = []
    for _ in range(n):
        if wildcard_prob and rng.random() < wildcard_prob:
            out.append("?")
        else:
            out.append(rng.choice(alphabet))
    return "".join(out)


def random_metric(alphabet: str, rng: random.Random, max_cost: int = 8) -> PenaltyMatrix:
    """Random valid integer metric: symmetric costs closed under triangles."""
    sigma = len(alphabet)
    pts = sigma + 1  # last point is the empty string
    c = [[0] * pts for _ in range(pts)]
    for i in range(pts):
        for j in range(i + 1, pts):
            c[i][j] = c[j][i] = rng.randint(1, max_cost)
    for m in range(pts):  # metric closure keeps integrality and positivity
        for i in range(pts):
            for j in range(pts):
                if c[i][m] + c[m][j] < c[i][j]:
                    c[i][j] = c[i][m] + c[m][j]
    sub = [[c[i][j] for j in range(sigma)] for i in range(sigma)]
    eps = [c[sigma][i] for i in range(sigma)]
    return PenaltyMatrix(alphabet, sub, eps, eps)


def naive_lcp_k(t: Text, i: int, j: int, k: int) -> int:
    """Character-by-character lcp with a mismatch budget."""
    n = len(t)
    total = 0
    budget = k
    while max(i, j) + total < n:
        if symbols_match(t[i + total], t[j + total]):
            total += 1
        elif budget > 0:
            budget -= 1
            total += 1
        else:
            break
    return total


def full_unit_dp(t1: Text, t2: Text) -> list[list[int]]:
    """Length-indexed unit-cost D-table with wildcard-matching substitutions."""
    m, n2 = len(t1), len(t2)
    d = [[0] * (n2 + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        for j in range(n2 + 1):
            if i == 0:
                d[i][j] = j
            elif j == 0:
                d[i][j] = i
            else:
                d[i][j] = min(
                    d[i - 1][j - 1] + (0 if symbols_match(t1[i - 1], t2[j - 1]) else 1),
                    d[i][j - 1] + 1,
                    d[i - 1][j] + 1)
    return d


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
