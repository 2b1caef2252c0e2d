"""Borel-Weil-Bott on the Grassmannian G(r, n).

A homogeneous bundle Schur_mu(Q) (x) Schur_lam(S) is encoded by the
concatenated weight c = (mu, lam) in Z^n. With rho = (n-1, ..., 0), the
cohomology vanishes if c + rho has a repeated entry; otherwise it is the
irreducible GL(V)-module of highest weight sort(c + rho) - rho placed in
degree equal to the number of inversions of c + rho.

O(1) = det Q, so twisting by O(j) adds j to every entry of mu.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import DomainError, InvalidWeightError
from .schur_core import Weight, check_weight, dual_weight, format_weight, weyl_dim


@dataclass(frozen=True)
class GrassmannData:
    r: int
    n: int

    def __post_init__(self):
        if self.r < 1 or 2 * self.r > self.n:
            raise DomainError(f"G({self.r},{self.n}) needs 1 <= r and 2r <= n")

    @property
    def dim(self) -> int:
        return self.r * (self.n - self.r)

    @property
    def rank_q(self) -> int:
        return self.n - self.r

    def __str__(self):
        return f"G({self.r},{self.n})"


@dataclass(frozen=True, order=True)
class HomogBundle:
    """Schur_mu(Q) (x) Schur_lam(S); mu has length n - r, lam has length r."""

    mu: Weight
    lam: Weight

    def __post_init__(self):
        object.__setattr__(self, "mu", check_weight(self.mu))
        object.__setattr__(self, "lam", check_weight(self.lam))

    @classmethod
    def trivial(cls, g: GrassmannData) -> "HomogBundle":
        return cls((0,) * g.rank_q, (0,) * g.r)

    @classmethod
    def line(cls, g: GrassmannData, j: int) -> "HomogBundle":
        return cls((j,) * g.rank_q, (0,) * g.r)

    def twist(self, j: int) -> "HomogBundle":
        return HomogBundle(tuple(x + j for x in self.mu), self.lam)

    def dual(self) -> "HomogBundle":
        return HomogBundle(dual_weight(self.mu), dual_weight(self.lam))

    @property
    def rank(self) -> int:
        return weyl_dim(self.mu) * weyl_dim(self.lam)

    def check(self, g: GrassmannData) -> None:
        if len(self.mu) != g.rank_q or len(self.lam) != g.r:
            raise InvalidWeightError(
                f"bundle ({format_weight(self.mu)}; {format_weight(self.lam)}) "
                f"does not fit {g}: need lengths {g.rank_q} and {g.r}"
            )

    def __str__(self):
        return f"Q[{format_weight(self.mu)}]S[{format_weight(self.lam)}]"


@dataclass(frozen=True)
class CohomologyResult:
    degree: int | None = None
    rep: Weight | None = None
    dim: int = 0

    @property
    def is_zero(self) -> bool:
        return self.degree is None

    def as_table(self) -> dict[int, int]:
        return {} if self.is_zero else {self.degree: self.dim}

    def to_dict(self) -> dict:
        if self.is_zero:
            return {"zero": True}
        return {"zero": False, "degree": self.degree, "rep": list(self.rep), "dim": self.dim}


ZERO = CohomologyResult()


def _count_inversions(seq: list[int]) -> tuple[list[int], int]:
    # bubble sort into strictly descending order, counting adjacent swaps
    s = list(seq)
    swaps = 0
    for i in range(len(s)):
        for j in range(len(s) - 1 - i):
            if s[j] < s[j + 1]:
                s[j], s[j + 1] = s[j + 1], s[j]
                swaps += 1
    return s, swaps


@lru_cache(maxsize=None)
def _bott(n: int, c: Weight) -> CohomologyResult:
    rho = range(n - 1, -1, -1)
    shifted = [a + b for a, b in zip(c, rho)]
    if len(set(shifted)) < n:
        return ZERO
    ordered, ell = _count_inversions(shifted)
    rep = tuple(a - b for a, b in zip(ordered, rho))
    return CohomologyResult(ell, rep, weyl_dim(rep))


def bott_cohomology(g: GrassmannData, b: HomogBundle) -> CohomologyResult:
    b.check(g)
    return _bott(g.n, b.mu + b.lam)


def euler_char(g: GrassmannData, b: HomogBundle) -> int:
    res = bott_cohomology(g, b)
    return 0 if res.is_zero else (-1) ** res.degree * res.dim


def cohomology_of_sum(g: GrassmannData, terms: Iterable[tuple[HomogBundle, int]]) -> dict[int, int]:
    table: dict[int, int] = defaultdict(int)
    for b, mult in terms:
        res = bott_cohomology(g, b)
        if not res.is_zero:
            table[res.degree] += mult * res.dim
    return dict(sorted(table.items()))


def euler_of_sum(g: GrassmannData, terms: Iterable[tuple[HomogBundle, int]]) -> int:
    """Signed multiplicities are allowed, so this also evaluates virtual classes."""
    return sum(m * euler_char(g, b) for b, m in terms)


def serre_dual(g: GrassmannData, b: HomogBundle) -> HomogBundle:
    """b^dual (x) K_G with K_G = O(-n)."""
    return b.dual().twist(-g.n)
