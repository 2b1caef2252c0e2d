"""Symbolic homogeneous bundles on G(r, n) and their decomposition into irreducibles.

Expressions are small trees over S, Q, O(j) and trivial bundles. Graded
extensions are kept as explicit nodes; normalizing one returns its associated
graded, which is exact for ranks and Euler characteristics but only an
upper bound for individual cohomology groups.

Text syntax (see README):

    expr  := term ('+' term)*
    term  := atom ('*' atom)*
    atom  := S | Q | O | O(int) | T | Omega | Ttilde | Omegatilde
           | trivial(int) | dual(expr) | sym(int, expr) | wedge(int, expr)
           | ext(expr, expr, ...) | '(' expr ')'
"""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .bott_engine import GrassmannData, HomogBundle
from .errors import FlopcheckError, UnsupportedError
from .schur_core import (
    Weight,
    cauchy_sym,
    cauchy_wedge,
    dual_weight,
    lr_tensor,
    pad,
)


class BundleExpr:
    def __add__(self, other):
        return Sum((self, other))

    def __mul__(self, other):
        return Tensor((self, other))


@dataclass(frozen=True)
class Taut(BundleExpr):
    name: str  # "S" or "Q"

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Line(BundleExpr):
    j: int

    def __str__(self):
        return "O" if self.j == 0 else f"O({self.j})"


@dataclass(frozen=True)
class Trivial(BundleExpr):
    m: int

    def __str__(self):
        return f"trivial({self.m})"


@dataclass(frozen=True)
class Dual(BundleExpr):
    e: BundleExpr

    def __str__(self):
        return f"dual({self.e})"


@dataclass(frozen=True)
class Tensor(BundleExpr):
    factors: tuple[BundleExpr, ...]

    def __str__(self):
        return " * ".join(f"({f})" if isinstance(f, Sum) else str(f) for f in self.factors)


@dataclass(frozen=True)
class Sum(BundleExpr):
    terms: tuple[BundleExpr, ...]

    def __str__(self):
        return " + ".join(str(t) for t in self.terms)


@dataclass(frozen=True)
class Sym(BundleExpr):
    k: int
    e: BundleExpr

    def __str__(self):
        return f"sym({self.k}, {self.e})"


@dataclass(frozen=True)
class Wedge(BundleExpr):
    k: int
    e: BundleExpr

    def __str__(self):
        return f"wedge({self.k}, {self.e})"


@dataclass(frozen=True)
class Ext(BundleExpr):
    """Graded extension; pieces listed from sub to quotient."""

    pieces: tuple[BundleExpr, ...]

    def __str__(self):
        return "ext(" + ", ".join(str(p) for p in self.pieces) + ")"


S = Taut("S")
Q = Taut("Q")
O = Line(0)
TANGENT = Tensor((Dual(S), Q))
COTANGENT = Tensor((Dual(Q), S))  # Hom(Q, S)
# 0 -> Omega -> Omega~ -> O -> 0 and its dual 0 -> O -> T~ -> T -> 0
COTANGENT_EXT = Ext((COTANGENT, O))
TANGENT_EXT = Ext((O, TANGENT))


@dataclass(frozen=True)
class NormalForm:
    terms: tuple[tuple[HomogBundle, int], ...]
    via_graded: bool = False

    @classmethod
    def from_counter(cls, c: Counter | dict, via_graded: bool = False) -> "NormalForm":
        items = [(b, m) for b, m in c.items() if m]
        if any(m < 0 for _, m in items):
            raise ValueError("NormalForm multiplicities must be positive")
        return cls(tuple(sorted(items, reverse=True)), via_graded)

    def counter(self) -> Counter:
        return Counter(dict(self.terms))

    @property
    def rank(self) -> int:
        return sum(m * b.rank for b, m in self.terms)

    def dual(self) -> "NormalForm":
        return NormalForm.from_counter({b.dual(): m for b, m in self.terms}, self.via_graded)

    def twist(self, j: int) -> "NormalForm":
        return NormalForm.from_counter({b.twist(j): m for b, m in self.terms}, self.via_graded)

    def __add__(self, other: "NormalForm") -> "NormalForm":
        return NormalForm.from_counter(self.counter() + other.counter(), self.via_graded or other.via_graded)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def to_dict(self) -> dict:
        return {
            "terms": [{"mu": list(b.mu), "lambda": list(b.lam), "mult": m} for b, m in self.terms],
            "rank": self.rank,
            "exactness": "e1-bound" if self.via_graded else "exact",
        }


def _contains_ext(e: BundleExpr) -> bool:
    if isinstance(e, Ext):
        return True
    for child in _children(e):
        if _contains_ext(child):
            return True
    return False


def _children(e: BundleExpr) -> tuple[BundleExpr, ...]:
    if isinstance(e, (Dual, Sym, Wedge)):
        return (e.e,)
    if isinstance(e, Tensor):
        return e.factors
    if isinstance(e, Sum):
        return e.terms
    if isinstance(e, Ext):
        return e.pieces
    return ()


def rank(e: BundleExpr, g: GrassmannData) -> int:
    if isinstance(e, Taut):
        return g.r if e.name == "S" else g.rank_q
    if isinstance(e, Line):
        return 1
    if isinstance(e, Trivial):
        return e.m
    if isinstance(e, Dual):
        return rank(e.e, g)
    if isinstance(e, Tensor):
        return math.prod(rank(f, g) for f in e.factors)
    if isinstance(e, (Sum, Ext)):
        return sum(rank(t, g) for t in _children(e))
    if isinstance(e, Sym):
        return math.comb(rank(e.e, g) + e.k - 1, e.k)
    if isinstance(e, Wedge):
        return math.comb(rank(e.e, g), e.k)
    raise TypeError(f"not a bundle expression: {e!r}")


def _tensor_bundles(a: HomogBundle, b: HomogBundle) -> Counter:
    out = Counter()
    for mu, cm in lr_tensor(a.mu, b.mu):
        for lam, cl in lr_tensor(a.lam, b.lam):
            out[HomogBundle(mu, lam)] += cm * cl
    return out


def tensor_nf(x: Counter, y: Counter) -> Counter:
    out = Counter()
    for a, ma in x.items():
        for b, mb in y.items():
            for c, mc in _tensor_bundles(a, b).items():
                out[c] += ma * mb * mc
    return out


def _factor_type(w: Weight):
    """Classify w as det^c, (standard) (x) det^c, or (dual standard) (x) det^c."""
    c = w[-1]
    if all(x == c for x in w):
        return "line", c
    if w[0] == c + 1 and all(x == c for x in w[1:]):
        return "std", c
    c = w[0]
    if w[-1] == c - 1 and all(x == c for x in w[:-1]):
        return "dual", c
    return None


def _schur_of_factor(kappa: Weight, kind: str, c: int, m: int) -> Weight | None:
    size = sum(kappa)
    if kind == "line":
        if len(kappa) > 1:
            return None
        return (c * size,) * m
    if len(kappa) > m:
        return None
    base = pad(kappa, m) if kind == "std" else dual_weight(pad(kappa, m))
    return tuple(x + c * size for x in base)


def _power_irreducible(b: HomogBundle, k: int, wedge: bool) -> Counter:
    tq, tl = _factor_type(b.mu), _factor_type(b.lam)
    if tq is None or tl is None:
        raise UnsupportedError(
            f"{'wedge' if wedge else 'sym'}^{k} of {b} would need plethysm"
        )
    rq, rl = len(b.mu), len(b.lam)
    pairs = cauchy_wedge(k, rq, rl) if wedge else cauchy_sym(k, rq, rl)
    out = Counter()
    for ka, kb in pairs:
        mu = _schur_of_factor(ka, tq[0], tq[1], rq)
        lam = _schur_of_factor(kb, tl[0], tl[1], rl)
        if mu is not None and lam is not None:
            out[HomogBundle(mu, lam)] += 1
    return out


def _power_sum(summands: list[HomogBundle], k: int, wedge: bool, trivial: HomogBundle) -> Counter:
    # Sym^k(A + B) = sum_a Sym^a A (x) Sym^(k-a) B, likewise for wedge
    if k == 0:
        return Counter({trivial: 1})
    if not summands:
        return Counter()
    head, rest = summands[0], summands[1:]
    out = Counter()
    top = min(k, head.rank) if wedge else k
    for a in range(top + 1):
        left = Counter({trivial: 1}) if a == 0 else _power_irreducible(head, a, wedge)
        if not left:
            continue
        right = _power_sum(rest, k - a, wedge, trivial)
        if right:
            out.update(tensor_nf(left, right))
    return out


@lru_cache(maxsize=None)
def _normalize(e: BundleExpr, g: GrassmannData) -> tuple[tuple[tuple[HomogBundle, int], ...], bool]:
    nf = _normalize_counter(e, g)
    return tuple(nf[0].items()), nf[1]


def _normalize_counter(e: BundleExpr, g: GrassmannData) -> tuple[Counter, bool]:
    triv = HomogBundle.trivial(g)
    if isinstance(e, Taut):
        if e.name == "S":
            return Counter({HomogBundle((0,) * g.rank_q, pad((1,), g.r)): 1}), False
        if e.name == "Q":
            return Counter({HomogBundle(pad((1,), g.rank_q), (0,) * g.r): 1}), False
        raise FlopcheckError(f"unknown generator {e.name}")
    if isinstance(e, Line):
        return Counter({HomogBundle.line(g, e.j): 1}), False
    if isinstance(e, Trivial):
        return Counter({triv: e.m}) if e.m else Counter(), False
    if isinstance(e, Dual):
        c, flag = _normalize_counter(e.e, g)
        return Counter({b.dual(): m for b, m in c.items()}), flag
    if isinstance(e, Tensor):
        acc, flag = Counter({triv: 1}), False
        for f in e.factors:
            c, fl = _normalize_counter(f, g)
            acc = tensor_nf(acc, c)
            flag = flag or fl
        return acc, flag
    if isinstance(e, (Sum, Ext)):
        acc, flag = Counter(), isinstance(e, Ext)
        for t in _children(e):
            c, fl = _normalize_counter(t, g)
            acc.update(c)
            flag = flag or fl
        return acc, flag
    if isinstance(e, (Sym, Wedge)):
        if _contains_ext(e.e):
            raise UnsupportedError(
                "powers of a graded extension go through sym_of_graded_extension"
            )
        if e.k < 0:
            raise FlopcheckError("negative power")
        c, _ = _normalize_counter(e.e, g)
        summands = [b for b, m in sorted(c.items()) for _ in range(m)]
        return _power_sum(summands, e.k, isinstance(e, Wedge), triv), False
    raise TypeError(f"not a bundle expression: {e!r}")


def normalize(e: BundleExpr, g: GrassmannData) -> NormalForm:
    terms, flag = _normalize(e, g)
    return NormalForm.from_counter(dict(terms), flag)


def sym_of_graded_extension(k: int, e: Ext, g: GrassmannData) -> NormalForm:
    """Associated graded of Sym^k of a two-step extension with one trivial line piece."""
    if not isinstance(e, Ext):
        raise UnsupportedError("expected a graded-extension node")
    if len(e.pieces) != 2:
        raise UnsupportedError("only two-step extensions are supported")
    triv = HomogBundle.trivial(g)
    forms = [normalize(p, g) for p in e.pieces]
    trivial_idx = [i for i, f in enumerate(forms) if f.terms == ((triv, 1),)]
    if not trivial_idx:
        raise UnsupportedError("extension has no trivial line piece")
    other = e.pieces[1 - trivial_idx[0]]
    out = Counter()
    for a in range(k + 1):
        out.update(normalize(Sym(a, other), g).counter())
    return NormalForm.from_counter(out, via_graded=True)


# --- text syntax -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(-?\d+)|([A-Za-z_][A-Za-z_]*)|(.))")
_NAMED = {
    "S": S,
    "Q": Q,
    "O": O,
    "T": TANGENT,
    "Omega": COTANGENT,
    "Ttilde": TANGENT_EXT,
    "Omegatilde": COTANGENT_EXT,
}


def _tokenize(text: str) -> list[tuple[str, str]]:
    text = text.replace("−", "-").replace("⊗", "*").replace("⊕", "+")
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, sym = m.groups()
        if num is not None:
            toks.append(("int", num))
        elif name is not None:
            toks.append(("name", name))
        elif sym.strip():
            toks.append(("op", sym))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise FlopcheckError(f"parse error in {self.text!r}: expected {want}, got {tok[1]!r}")
        self.i += 1
        return tok[1]

    def expr(self) -> BundleExpr:
        terms = [self.term()]
        while self.peek() == ("op", "+"):
            self.take()
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> BundleExpr:
        factors = [self.atom()]
        while self.peek() == ("op", "*"):
            self.take()
            factors.append(self.atom())
        return factors[0] if len(factors) == 1 else Tensor(tuple(factors))

    def atom(self) -> BundleExpr:
        kind, val = self.peek()
        if (kind, val) == ("op", "("):
            self.take()
            e = self.expr()
            self.take("op", ")")
            return e
        name = self.take("name")
        if name == "O" and self.peek() == ("op", "("):
            self.take()
            j = int(self.take("int"))
            self.take("op", ")")
            return Line(j)
        if name in _NAMED:
            return _NAMED[name]
        self.take("op", "(")
        if name == "trivial":
            out = Trivial(int(self.take("int")))
        elif name == "dual":
            out = Dual(self.expr())
        elif name in ("sym", "wedge"):
            k = int(self.take("int"))
            self.take("op", ",")
            inner = self.expr()
            out = Sym(k, inner) if name == "sym" else Wedge(k, inner)
        elif name == "ext":
            pieces = [self.expr()]
            while self.peek() == ("op", ","):
                self.take()
                pieces.append(self.expr())
            out = Ext(tuple(pieces))
        else:
            raise FlopcheckError(f"parse error in {self.text!r}: unknown name {name!r}")
        self.take("op", ")")
        return out


def parse_expr(text: str) -> BundleExpr:
    p = _Parser(text)
    e = p.expr()
    if p.i != len(p.toks):
        raise FlopcheckError(f"parse error in {text!r}: trailing {p.peek()[1]!r}")
    return e
