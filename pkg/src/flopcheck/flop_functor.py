"""Table-level model of the flop functors Phi, Psi on the spanning generators.

Generators are Sym^i S^*_X (x) O_X(j) with i, j >= 0 and i + j <= n - 2.
Images under Phi live on X+ and come in three kinds: honest bundles
Sym^i S+ (x) O(-j), the twisted ideal sheaf I_{W+} (x) O(-n+2), and the
sheaves E+_i (x) O(-n+2+i) cut out of Sym^i S+ by the rank condition on W+.
The last two are never built as sheaves; only their defining sequences and
K-classes are tracked.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .birational_lattice import E1P, E2, H, DivClassY, canonical_coefficients, plus_hyperplane
from .bott_engine import GrassmannData, HomogBundle, bott_cohomology
from .bundle_algebra import Dual, Line, S, Sym, Tensor
from .errors import DomainError, UnsupportedError
from .total_space import (
    DEFAULT_CUTOFF,
    GradedExtTable,
    TotalSpaceModel,
    euler_pairing,
    graded_hom,
    span_generators,
)


@dataclass(frozen=True, order=True)
class GeneratorSheaf:
    i: int
    j: int
    n: int = 4

    def __post_init__(self):
        if self.i < 0 or self.j < 0 or self.i + self.j > self.n - 2:
            raise DomainError(f"(i={self.i}, j={self.j}) outside i, j >= 0, i + j <= {self.n - 2}")

    def expr(self):
        return Tensor((Sym(self.i, Dual(S)), Line(self.j)))

    def __str__(self):
        return f"Sym^{self.i} S^*_X (x) O_X({self.j})"

    def to_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "n": self.n}


@dataclass(frozen=True)
class PlusBundle:
    i: int
    j: int

    kind = "plus-bundle"

    def expr(self):
        return Tensor((Sym(self.i, S), Line(-self.j)))

    def __str__(self):
        return f"Sym^{self.i} S+ (x) O_X+({-self.j})"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "i": self.i, "j": self.j}


@dataclass(frozen=True)
class IdealTwist:
    n: int

    kind = "ideal-twist"

    @property
    def twist(self) -> int:
        return -self.n + 2

    def __str__(self):
        return f"I_W+ (x) O_X+({self.twist})"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "twist": self.twist}


@dataclass(frozen=True)
class EPlus:
    i: int
    n: int

    kind = "e-plus"

    @property
    def twist(self) -> int:
        return -self.n + 2 + self.i

    @property
    def sequence(self) -> str:
        t = self.twist
        return (f"0 -> E+_{self.i} (x) O({t}) -> Sym^{self.i} S+ (x) O({t}) "
                f"-> O_W+ (x) O({-self.n + 2}) -> 0")

    def __str__(self):
        return f"E+_{self.i} (x) O_X+({self.twist})"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "i": self.i, "n": self.n, "twist": self.twist, "sequence": self.sequence}


ImageSheaf = PlusBundle | IdealTwist | EPlus


def phi_image(g: GeneratorSheaf) -> ImageSheaf:
    i, j, n = g.i, g.j, g.n
    if i + j <= n - 3:
        return PlusBundle(i, j)
    if i == 0:
        return IdealTwist(n)
    return EPlus(i, n)


def psi_image(s: ImageSheaf, n: int = 4) -> GeneratorSheaf:
    if isinstance(s, PlusBundle):
        if s.i + s.j > n - 3:
            raise UnsupportedError(f"{s} is not a Phi-image of a generator at n={n}")
        return GeneratorSheaf(s.i, s.j, n)
    if n != 4 or s.n != 4:
        raise UnsupportedError(f"Psi of {s} is only established for n = 4")
    if isinstance(s, IdealTwist):
        return GeneratorSheaf(0, 2, 4)
    if isinstance(s, EPlus) and 0 < s.i <= 2:
        return GeneratorSheaf(s.i, 2 - s.i, 4)
    raise UnsupportedError(f"no Psi image recorded for {s}")


def roundtrip_check(n: int = 4) -> dict:
    chains = []
    for i, j in span_generators(n):
        g = GeneratorSheaf(i, j, n)
        img = phi_image(g)
        back = psi_image(img, n)
        chains.append({"generator": g.to_dict(), "image": img.to_dict(), "back": back.to_dict(), "ok": back == g})
    images = [c["image"] for c in chains]
    distinct = len({repr(sorted(d.items())) for d in images}) == len(images)
    return {"n": n, "chains": chains, "injective": distinct, "ok": distinct and all(c["ok"] for c in chains)}


def r1_functor_table(l: int, n: int) -> dict:
    """r = 1 functors on the line bundles O_X(k), l - n + 1 <= k <= l.

    Phi_l sends O_X(k) to O_Y(0,-k)((l-k)E) and Psi_l sends O_X+(-k) to
    O_Y(k,0)((n-1-l+k)E); both E-coefficients must stay in [0, n-1] so the
    pushforward along the blow-up (center of codimension n) is trivial.
    """
    if n < 2:
        raise DomainError("r = 1 needs n >= 2")
    phi, psi, coeffs = {}, {}, {}
    for k in range(l - n + 1, l + 1):
        phi[k] = -k
        psi[-k] = k
        coeffs[k] = (l - k, n - 1 - l + k)
    in_range = all(0 <= a <= n - 1 and 0 <= b <= n - 1 for a, b in coeffs.values())
    roundtrip = all(psi[phi[k]] == k for k in phi)
    return {"l": l, "n": n, "phi": phi, "psi": psi, "e_coefficients": coeffs,
            "in_range": in_range, "roundtrip": roundtrip}


@dataclass(frozen=True)
class ENTerm:
    description: str
    bundle: HomogBundle  # class on G+ = G(2, n)
    mult: int  # dimension of the exterior power of V^*
    sign: int

    @property
    def rank(self) -> int:
        return self.mult * self.bundle.rank


@dataclass
class ENComplex:
    n: int
    terms: list[ENTerm]

    @property
    def ranks(self) -> list[int]:
        return [t.rank for t in self.terms]

    @property
    def signs(self) -> list[int]:
        return [t.sign for t in self.terms]

    @property
    def signed_rank_sum(self) -> int:
        return sum(t.sign * t.rank for t in self.terms)

    def k_class(self) -> Counter:
        """Class of the resolved sheaf O_W+(-1) as a signed sum of bundles on G+."""
        out = Counter()
        for t in self.terms:
            out[t.bundle] += t.sign * t.mult
        return Counter({b: m for b, m in out.items() if m})

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"description": t.description, "rank": t.rank, "sign": t.sign} for t in self.terms],
            "signed_rank_sum": self.signed_rank_sum,
        }


def eagon_northcott(n: int) -> ENComplex:
    if n < 4:
        raise DomainError(f"n={n}: need n >= 4")
    raw = []
    for k in range(n - 2, 0, -1):
        raw.append((f"(Sym^{k} S+)^* (x) wedge^{k + 2} V^*", HomogBundle((0,) * (n - 2), (0, -k)), math.comb(n, k + 2)))
    raw.append(("O (x) wedge^2 V^*", HomogBundle((0,) * (n - 2), (0, 0)), math.comb(n, 2)))
    raw.append(("wedge^2 S+", HomogBundle((0,) * (n - 2), (1, 1)), 1))
    last = len(raw) - 1
    terms = [ENTerm(d, b, m, (-1) ** (last - idx)) for idx, (d, b, m) in enumerate(raw)]
    return ENComplex(n, terms)


@dataclass(frozen=True)
class LadderStep:
    k: int
    l: int
    e1: int  # coefficient of E1' in the quotient twist
    e2: int  # coefficient of E2
    plus_twist: int  # power of f^+*O_X+(1)

    @property
    def descriptor(self) -> str:
        return f"O_E2({self.e1}E1' {self.e2:+d}E2) (x) f+^*O_X+({self.plus_twist})"


@dataclass
class FiltrationLadder:
    i: int
    steps: list[LadderStep] = field(default_factory=list)

    @property
    def bottom(self) -> str:
        return f"F^({self.i},0) = f+^*Sym^{self.i} S+ ({-self.i}E1' {-self.i:+d}E2)"

    def chain(self) -> list[tuple[int, int]]:
        return [(s.k, s.l) for s in self.steps] + [(self.i, 0)]

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "steps": [{"k": s.k, "l": s.l, "quotient": s.descriptor} for s in self.steps],
            "bottom": self.bottom,
        }


def filtration_ladder(i: int) -> FiltrationLadder:
    if i < 1:
        raise DomainError("ladder needs i >= 1")
    steps = [LadderStep(k, l, -i, -k, -k + l) for k in range(i) for l in range(k + 1)]
    return FiltrationLadder(i, steps)


def _shift_analysis(left: GradedExtTable, right: GradedExtTable) -> dict:
    cutoff = left.cutoff
    degrees = sorted(set(left.degrees()) | set(right.degrees()))
    per_degree = {}
    for p in degrees:
        a, b = left.column(p), right.column(p)
        shifts = []
        for s in range(-cutoff, cutoff + 1):
            overlap = [(a[k], b[k + s]) for k in range(cutoff + 1) if 0 <= k + s <= cutoff]
            if overlap and all(x == y for x, y in overlap) and any(x for x, _ in overlap):
                shifts.append(s)
        per_degree[p] = {"minus": a, "plus": b, "consistent_shifts": sorted(shifts, key=lambda s: (abs(s), s))}
    common = None
    for info in per_degree.values():
        s = set(info["consistent_shifts"])
        common = s if common is None else common & s
    return {
        "per_degree": per_degree,
        "uniform_shifts": sorted(common or (), key=lambda s: (abs(s), s)),
        "identical": all(left.column(p) == right.column(p) for p in degrees),
    }


def hom_compare(g1: GeneratorSheaf, g2: GeneratorSheaf, cutoff: int = DEFAULT_CUTOFF) -> dict:
    """Graded Hom on X between two generators next to graded Hom on X+ between their images.

    Agreement is not asserted: the correspondence of the C^*-gradings across
    the flop is not fixed, so only candidate shifts are listed.
    """
    if cutoff < 0:
        raise DomainError("cutoff must be >= 0")
    im1, im2 = phi_image(g1), phi_image(g2)
    if not (isinstance(im1, PlusBundle) and isinstance(im2, PlusBundle)):
        raise UnsupportedError(f"unsupported pair: images {im1}, {im2} are not both bundles")
    base = GrassmannData(2, g1.n)
    minus = graded_hom(g1.expr(), g2.expr(), TotalSpaceModel(base, "extended-cotangent", "minus"), cutoff)
    plus = graded_hom(im1.expr(), im2.expr(), TotalSpaceModel(base, "extended-cotangent", "plus"), cutoff)
    return {
        "g1": g1.to_dict(),
        "g2": g2.to_dict(),
        "images": [im1.to_dict(), im2.to_dict()],
        "minus": minus.to_dict(),
        "plus": plus.to_dict(),
        "shift_analysis": _shift_analysis(minus, plus),
        "_tables": (minus, plus),
    }


def plus_generator(g: GrassmannData, i: int, j: int) -> HomogBundle:
    """Sym^i S+ (x) O(-j) on G+ = G(2, n)."""
    return HomogBundle((-j,) * g.rank_q, (i,) + (0,) * (g.r - 1))


def _class_pairing_row(g: GrassmannData, cls: Counter) -> list[int]:
    row = []
    for i, j in span_generators(g.n):
        w = plus_generator(g, i, j)
        row.append(sum(m * euler_pairing(g, w, b) for b, m in cls.items()))
    return row


WPLUS_SOURCES = ("eagon-northcott", "divisor", "zero")


def k_class_report(n: int = 4, wplus_source: str = "eagon-northcott") -> dict:
    """K-class assigned to I_W+ (x) O(-2) in K(X+) = K(G+), with its Euler pairing row.

    The class of O_W+ on X+ is an input: the resolution on X0+, the divisor
    relation O_X0+(-W+) = O_X0+(2) (n = 4 only), or zero (pushforward from
    the fibre X0+ of a function).
    """
    if wplus_source not in WPLUS_SOURCES:
        raise ValueError(f"wplus_source must be one of {WPLUS_SOURCES}")
    g = GrassmannData(2, n)
    if wplus_source == "eagon-northcott":
        w_minus1 = eagon_northcott(n).k_class()
    elif wplus_source == "divisor":
        if n != 4:
            raise UnsupportedError("divisor relation is only available at n = 4")
        w_minus1 = Counter({HomogBundle.line(g, -1): 1, HomogBundle.line(g, 1): -1})
    else:
        w_minus1 = Counter()
    # [I_W+ (x) O(-n+2)] = [O(-n+2)] - [O_W+(-1)].[O(-n+3)]
    cls = Counter({HomogBundle.line(g, -n + 2): 1})
    for b, m in w_minus1.items():
        cls[b.twist(-n + 3)] -= m
    cls = Counter({b: m for b, m in cls.items() if m})
    w_row = _class_pairing_row(g, w_minus1)
    return {
        "n": n,
        "wplus_source": wplus_source,
        "wplus_class_rank": sum(m * b.rank for b, m in w_minus1.items()),
        "wplus_pairing_row": w_row,
        "ideal_twist_class": [{"mu": list(b.mu), "lambda": list(b.lam), "mult": m} for b, m in sorted(cls.items())],
        "ideal_twist_rank": sum(m * b.rank for b, m in cls.items()),
        "ideal_twist_pairing_row": _class_pairing_row(g, cls),
    }


def projective_vanishing(m: int, t: int) -> bool:
    """H^*(P^m, O(-t)) = 0, through Bott on G(1, m + 1)."""
    g = GrassmannData(1, m + 1)
    return bott_cohomology(g, HomogBundle.line(g, -t)).is_zero


def blowup_pushforward_trivial(codim: int, t: int) -> bool:
    """R f_* O(tE) = O for a smooth blow-up of a codim-c center, checked fibrewise.

    The fibres of E are P^(c-1) with O_E(E) = O(-1); peeling off E one step at
    a time needs H^*(P^(c-1), O(-s)) = 0 for 1 <= s <= t.
    """
    if t < 0:
        return False
    return all(projective_vanishing(codim - 1, s) for s in range(1, t + 1))


def vanishing_bookkeeping(n: int) -> dict:
    """Arithmetic side of the direct-image vanishing steps, r = 2."""
    a1, a2 = canonical_coefficients(n)
    codim_g = a1 + 1  # G in X
    codim_w = a2 + 1  # W' in X_1
    e2_fibres = all(projective_vanishing(codim_w - 1, t) for t in range(1, n - 2))
    phi_rows, psi_rows = [], []
    for i in range(n - 2):
        for j in range(n - 2 - i):
            phi_rows.append(blowup_pushforward_trivial(codim_g, 2 * n - 5 - i - 2 * j))
            psi_rows.append(blowup_pushforward_trivial(codim_g, i + 2 * j + 1))
    return {
        "n": n,
        "e2_fibre_vanishing": e2_fibres,
        "phi_e1_pushforward": all(phi_rows),
        "psi_e1_pushforward": all(psi_rows),
    }


def p3_fibre_checks() -> dict:
    """Degrees on the P^3 fibres P0' of F+ at n = 4: O(E1') = O(-1), O(E2) = O(2), f^*O_X(1) trivial."""
    def degree(d: DivClassY) -> int:
        return int(-d.c_1 + 2 * d.c_2)

    twist_psi = 4 * E1P + E2
    # O_F+(-E2) (x) f+^*O(-2) restricted to P0'
    cokernel_piece = -E2 + (-2) * plus_hyperplane() - 2 * H  # drop f^*O_X(2)
    return {
        "deg_4E1'+E2": degree(twist_psi),
        "deg_cokernel_piece": degree(cokernel_piece),
        "cokernel_piece_equals_4E1'+E2": cokernel_piece == twist_psi,
        "vanishing": projective_vanishing(3, -degree(twist_psi)),
    }
