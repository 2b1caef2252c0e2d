"""Partition and GL_m weight combinatorics.

Weights are plain tuples of ints, weakly decreasing. A partition is a weight
with non-negative entries and no trailing zeros. Everything here is exact
integer arithmetic.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InvalidWeightError, LengthMismatchError

Weight = tuple[int, ...]


def check_weight(nu: Iterable[int]) -> Weight:
    nu = tuple(int(x) for x in nu)
    for a, b in zip(nu, nu[1:]):
        if a < b:
            raise InvalidWeightError(f"weight {nu} is not weakly decreasing")
    return nu


def partition(parts: Iterable[int]) -> Weight:
    """Canonical partition: validated, trailing zeros stripped."""
    p = check_weight(parts)
    if p and p[-1] < 0:
        raise InvalidWeightError(f"partition {p} has negative parts")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def pad(p: Iterable[int], m: int) -> Weight:
    p = tuple(p)
    if len(p) > m:
        raise LengthMismatchError(f"{p} has more than {m} rows")
    return p + (0,) * (m - len(p))


def parse_weight(text: str) -> Weight:
    """Parse "2, 1,0" style text. Accepts the unicode minus sign."""
    text = text.replace("−", "-").strip()
    if not text:
        return ()
    return check_weight(int(tok) for tok in text.split(","))


def format_weight(nu: Iterable[int]) -> str:
    return ",".join(str(x) for x in nu)


def conjugate(p: Iterable[int]) -> Weight:
    p = partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > c) for c in range(p[0]))


def partitions_of(k: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Weight]:
    """Partitions of k in descending lexicographic order."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(k, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions_of(k - first, rest_len, first):
            yield (first,) + rest


def weyl_dim(nu: Iterable[int]) -> int:
    nu = check_weight(nu)
    m = len(nu)
    num = math.prod(nu[i] - nu[j] + j - i for i in range(m) for j in range(i + 1, m))
    den = math.prod(j - i for i in range(m) for j in range(i + 1, m))
    q, r = divmod(num, den)
    assert r == 0 and q > 0
    return q


def dual_weight(nu: Iterable[int]) -> Weight:
    nu = check_weight(nu)
    return tuple(-x for x in reversed(nu))


@dataclass(frozen=True)
class IrrepSum:
    """Formal sum of irreducible GL_m representations, canonically ordered."""

    terms: tuple[tuple[Weight, int], ...]

    @classmethod
    def from_counter(cls, c: Counter | dict) -> "IrrepSum":
        items = [(w, m) for w, m in c.items() if m]
        if any(m < 0 for _, m in items):
            raise ValueError("IrrepSum multiplicities must be positive")
        return cls(tuple(sorted(items, reverse=True)))

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.terms)

    def dim(self) -> int:
        return sum(m * weyl_dim(w) for w, m in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


def _horizontal_strips(shape: Weight, k: int, max_rows: int) -> Iterator[tuple[Weight, Weight]]:
    """Shapes obtained by adding a horizontal k-strip, with boxes added per row."""
    rows = list(shape) + [0] * (max_rows - len(shape))

    def rec(i: int, left: int, acc: list[int]):
        if i == max_rows:
            if left == 0:
                yield tuple(acc)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for a in range(cap, -1, -1):
            acc.append(a)
            yield from rec(i + 1, left - a, acc)
            acc.pop()

    for added in rec(0, k, []):
        new = tuple(r + a for r, a in zip(rows, added))
        yield new, added


@lru_cache(maxsize=None)
def lr_product(lam: Weight, mu: Weight, max_rows: int) -> tuple[tuple[Weight, int], ...]:
    """s_lam * s_mu truncated to at most max_rows rows, via LR tableaux.

    Boxes labelled t are added as a horizontal strip after labels < t; the
    reverse reading word is a lattice word iff, for each t >= 2 and every row r,
    #t in rows <= r does not exceed #(t-1) in rows < r.
    """
    lam, mu = partition(lam), partition(mu)
    out: Counter = Counter()

    def place(shape: Weight, prev: Weight | None, t: int):
        if t == len(mu):
            out[partition(shape)] += 1
            return
        for new, added in _horizontal_strips(shape, mu[t], max_rows):
            if prev is not None:
                ok = True
                cum_t = cum_prev = 0
                for r in range(max_rows):
                    cum_t += added[r]
                    if cum_t > cum_prev:
                        ok = False
                        break
                    cum_prev += prev[r]
                if not ok:
                    continue
            place(new, added, t + 1)

    place(pad(lam, max_rows), None, 0)
    return tuple(sorted(out.items(), reverse=True))


def lr_tensor(lam: Iterable[int], mu: Iterable[int]) -> IrrepSum:
    """Decompose V_lam (x) V_mu for GL_m; entries may be negative."""
    lam, mu = check_weight(lam), check_weight(mu)
    if len(lam) != len(mu):
        raise LengthMismatchError(f"weights of lengths {len(lam)} and {len(mu)}")
    m = len(lam)
    if m == 0:
        return IrrepSum((((), 1),))
    # coefficients are invariant under det twists
    a, b = min(lam[-1], 0), min(mu[-1], 0)
    pl = tuple(x - a for x in lam)
    pm = tuple(x - b for x in mu)
    out = Counter()
    for nu, c in lr_product(partition(pl), partition(pm), m):
        out[tuple(x + a + b for x in pad(nu, m))] += c
    return IrrepSum.from_counter(out)


def cauchy_sym(k: int, rank_a: int, rank_b: int) -> list[tuple[Weight, Weight]]:
    """Sym^k(A (x) B) = sum over kappa |- k of Schur_kappa A (x) Schur_kappa B."""
    return [(p, p) for p in partitions_of(k, min(rank_a, rank_b))]


def cauchy_wedge(k: int, rank_a: int, rank_b: int) -> list[tuple[Weight, Weight]]:
    """Wedge^k(A (x) B) = sum over kappa |- k of Schur_kappa A (x) Schur_kappa' B."""
    out = []
    for p in partitions_of(k, rank_a):
        c = conjugate(p)
        if len(c) <= rank_b:
            out.append((p, c))
    return out
