"""Graded Ext on X0 = Tot(Omega_G) and X = Tot(Omega~_G), plus the Euler Gram matrix.

pi: X -> G is affine, so pi_* O_X = Sym(T~_G) with graded pieces Sym^k T~_G
(Sym^k T_G on X0). For pullback bundles A, B,

    Hom^p_X(pi^*A, pi^*B)_k = H^p(G, A^dual (x) B (x) gr_k pi_* O).

On X the extension T~ does not split, so per-degree numbers are read off the
associated graded: exact Euler characteristics, upper bounds per degree.
"""
from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

import sympy

from .bott_engine import GrassmannData, HomogBundle, bott_cohomology, euler_char
from .bundle_algebra import (
    TANGENT,
    TANGENT_EXT,
    BundleExpr,
    Dual,
    NormalForm,
    Sym,
    Tensor,
    _contains_ext,
    normalize,
    sym_of_graded_extension,
    tensor_nf,
)
from .errors import DomainError, UnsupportedError

DEFAULT_CUTOFF = 10
KINDS = ("cotangent", "extended-cotangent")
SIDES = ("minus", "plus")


@dataclass(frozen=True)
class TotalSpaceModel:
    base: GrassmannData
    kind: str = "extended-cotangent"
    side: str = "minus"  # label only: G+ = G(r, V^*) has the same invariants

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}")

    @property
    def exact(self) -> bool:
        return self.kind == "cotangent"

    @property
    def label(self) -> str:
        name = "X0" if self.kind == "cotangent" else "X"
        return name + ("+" if self.side == "plus" else "")


@dataclass
class GradedExtTable:
    cutoff: int
    exactness: str
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def entry(self, p: int, k: int) -> int:
        if k > self.cutoff:
            raise KeyError(f"grading {k} is above the cutoff {self.cutoff}")
        return self.entries.get((p, k), 0)

    def column(self, p: int) -> list[int]:
        return [self.entry(p, k) for k in range(self.cutoff + 1)]

    def degrees(self) -> list[int]:
        return sorted({p for p, _ in self.entries})

    def euler(self, k: int) -> int:
        return sum((-1) ** p * d for (p, kk), d in self.entries.items() if kk == k)

    def to_dict(self) -> dict:
        rows = [[p, k, d] for (p, k), d in sorted(self.entries.items()) if d]
        return {"cutoff": self.cutoff, "entries": rows, "exactness": self.exactness}


@lru_cache(maxsize=None)
def _pushforward(k: int, base: GrassmannData, kind: str) -> NormalForm:
    if kind == "cotangent":
        return normalize(Sym(k, TANGENT), base)
    return sym_of_graded_extension(k, TANGENT_EXT, base)


def pushforward_graded(k: int, m: TotalSpaceModel, cutoff: int = DEFAULT_CUTOFF) -> NormalForm:
    if k < 0 or k > cutoff:
        raise DomainError(f"grading {k} outside 0..{cutoff}")
    return _pushforward(k, m.base, m.kind)


def hom_bundle(a: BundleExpr, b: BundleExpr, g: GrassmannData) -> NormalForm:
    if _contains_ext(a) or _contains_ext(b):
        raise UnsupportedError("graded_hom needs pullbacks of homogeneous bundles")
    return normalize(Tensor((Dual(a), b)), g)


def graded_hom(a: BundleExpr, b: BundleExpr, m: TotalSpaceModel, cutoff: int = DEFAULT_CUTOFF) -> GradedExtTable:
    g = m.base
    hom = hom_bundle(a, b, g).counter()
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for k in range(cutoff + 1):
        piece = tensor_nf(hom, pushforward_graded(k, m, cutoff).counter())
        for bundle, mult in sorted(piece.items()):
            res = bott_cohomology(g, bundle)
            if not res.is_zero:
                entries[(res.degree, k)] += mult * res.dim
    return GradedExtTable(cutoff, "exact" if m.exact else "e1-bound", dict(entries))


def span_generator(g: GrassmannData, i: int, j: int) -> HomogBundle:
    """Sym^i S^* (x) O(j) as a single homogeneous bundle."""
    lam = (0,) * (g.r - 1) + (-i,)
    return HomogBundle((j,) * g.rank_q, lam)


def span_generators(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n - 1) for j in range(n - 1 - i)]


def euler_pairing(g: GrassmannData, a: HomogBundle, b: HomogBundle) -> int:
    """chi(a^dual (x) b) on G."""
    prod = tensor_nf(Counter({a.dual(): 1}), Counter({b: 1}))
    return sum(m * euler_char(g, t) for t, m in prod.items())


def spanning_gram(g: GrassmannData, gens: list[tuple[int, int]] | None = None):
    """Euler Gram matrix of Sym^i S^* (x) O(j), i + j <= n - 2, and its determinant."""
    if gens is None:
        gens = span_generators(g.n)
    for i, j in gens:
        if i < 0 or j < 0 or i + j > g.n - 2:
            raise DomainError(f"generator (i={i}, j={j}) violates i, j >= 0, i + j <= {g.n - 2}")
    bundles = [span_generator(g, i, j) for i, j in gens]
    matrix = [[euler_pairing(g, u, v) for v in bundles] for u in bundles]
    det = int(sympy.Matrix(matrix).det()) if matrix else 1
    return matrix, det


def generator_count(n: int) -> int:
    return len(span_generators(n))


def k_group_rank(n: int) -> int:
    return math.comb(n, 2)
