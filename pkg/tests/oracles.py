"""Independent brute-force oracles. Nothing here imports the engine's algorithms."""
from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction


def ssyt(shape, m):
    """All semistandard fillings of `shape` with entries 1..m, as row tuples."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling = {}

    def rec(idx):
        if idx == len(cells):
            yield dict(filling)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, m + 1):
            filling[(r, c)] = v
            yield from rec(idx + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def character(weight):
    """Formal character of the GL_m irrep with highest weight `weight`, as exponent Counter."""
    m = len(weight)
    shift = min(min(weight), 0)
    shape = [x - shift for x in weight]
    shape = [x for x in shape if x > 0]
    out = Counter()
    for t in ssyt(shape, m):
        exps = [shift] * m
        for v in t.values():
            exps[v - 1] += 1
        out[tuple(exps)] += 1
    return out


def char_product(a, b):
    out = Counter()
    for ea, ma in a.items():
        for eb, mb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ma * mb
    return out


def weyl_polynomial(c):
    """Weyl dimension polynomial at an arbitrary integer vector; equals chi of the bundle."""
    n = len(c)
    val = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            val *= Fraction(c[i] - c[j] + j - i, j - i)
    assert val.denominator == 1
    return int(val)


def laplace_det(mat):
    if not mat:
        return 1
    if len(mat) == 1:
        return mat[0][0]
    total = 0
    for col, entry in enumerate(mat[0]):
        if entry:
            minor = [row[:col] + row[col + 1:] for row in mat[1:]]
            total += (-1) ** col * entry * laplace_det(minor)
    return total


def count_partitions(k, max_len):
    return sum(1 for p in itertools.product(range(k + 1), repeat=max_len)
               if sum(p) == k and list(p) == sorted(p, reverse=True))


def sym_rank(r, k):
    return math.comb(r + k - 1, k)
