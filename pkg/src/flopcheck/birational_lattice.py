"""Relative divisor and curve lattices of Y = X_2 -> X_1 -> X for r = 2.

Divisors are written in the basis (f^*O_X(1), E1', E2); curves in the basis
(l1', l2) which spans the relative cone of curves. f^*O_X(1) is trivial on
f-contracted curves. The f^+ side is not a basis vector: f^+*O_{X+}(1) is
recovered from the determinant identity

    f^*O_X(1) = f^+*O_{X+}(-1) (x) O_Y(-2E1' - E2).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

# rows E1', E2; columns l1', l2
INTERSECTION_TABLE = {
    ("E1'", "l1'"): -1,
    ("E1'", "l2"): 0,
    ("E2", "l1'"): 2,
    ("E2", "l2"): -1,
}


@dataclass(frozen=True)
class DivClassY:
    c_h: Fraction = Fraction(0)
    c_1: Fraction = Fraction(0)
    c_2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("c_h", "c_1", "c_2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __add__(self, other: "DivClassY") -> "DivClassY":
        return DivClassY(self.c_h + other.c_h, self.c_1 + other.c_1, self.c_2 + other.c_2)

    def __neg__(self) -> "DivClassY":
        return DivClassY(-self.c_h, -self.c_1, -self.c_2)

    def __sub__(self, other: "DivClassY") -> "DivClassY":
        return self + (-other)

    def __rmul__(self, s) -> "DivClassY":
        return DivClassY(s * self.c_h, s * self.c_1, s * self.c_2)

    def is_effective_exceptional(self) -> bool:
        """Non-negative combination of E1' and E2 (no f^*O_X(1) part)."""
        return self.c_h == 0 and self.c_1 >= 0 and self.c_2 >= 0

    def to_list(self) -> list[str]:
        return [str(self.c_h), str(self.c_1), str(self.c_2)]

    def __str__(self):
        return f"{self.c_h}H + {self.c_1}E1' + {self.c_2}E2"


@dataclass(frozen=True)
class CurveClassY:
    a: Fraction = Fraction(0)  # coefficient of l1'
    b: Fraction = Fraction(0)  # coefficient of l2

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a < 0 or self.b < 0:
            raise DomainError("relative curve classes lie in the cone spanned by l1' and l2")

    def to_list(self) -> list[str]:
        return [str(self.a), str(self.b)]


H = DivClassY(1, 0, 0)
E1P = DivClassY(0, 1, 0)
E2 = DivClassY(0, 0, 1)
L1P = CurveClassY(1, 0)
L2 = CurveClassY(0, 1)


def pair(d: DivClassY, c: CurveClassY) -> Fraction:
    t = INTERSECTION_TABLE
    on_l1 = d.c_1 * t[("E1'", "l1'")] + d.c_2 * t[("E2", "l1'")]
    on_l2 = d.c_1 * t[("E1'", "l2")] + d.c_2 * t[("E2", "l2")]
    return c.a * on_l1 + c.b * on_l2


def relative_nef(d: DivClassY) -> bool:
    return pair(d, L1P) >= 0 and pair(d, L2) >= 0


def plus_hyperplane() -> DivClassY:
    """f^+*O_{X+}(1) in the (H, E1', E2) basis."""
    return -H - 2 * E1P - E2


@dataclass(frozen=True)
class FlopDimensions:
    r: int
    n: int
    dim_G: int
    dim_X0: int
    dim_X: int
    dim_W: int

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("r", "n", "dim_G", "dim_X0", "dim_X", "dim_W")}


def flop_dimensions(r: int, n: int) -> FlopDimensions:
    if r < 1 or 2 * r > n:
        raise DomainError(f"need 1 <= r and 2r <= n, got r={r}, n={n}")
    dim_g = r * (n - r)
    return FlopDimensions(
        r, n,
        dim_G=dim_g,
        dim_X0=2 * dim_g,
        dim_X=2 * dim_g + 1,
        dim_W=2 * (r - 1) * (n - r + 1) + n - 2 * r + 1,
    )


def canonical_coefficients(n: int) -> tuple[int, int]:
    """Coefficients of E1', E2 in K_Y - f^*K_X for the r = 2 tower."""
    if n < 4:
        raise DomainError(f"n={n}: the blow-up tower needs n >= 4")
    direct = (2 * n - 4, n - 3)
    # each smooth blow-up contributes codim(center) - 1; W' is not inside E1
    dims = flop_dimensions(2, n)
    two_step = (dims.dim_X - dims.dim_G - 1, dims.dim_X - dims.dim_W - 1)
    if direct != two_step:
        raise AssertionError(f"discrepancy mismatch at n={n}: {direct} vs {two_step}")
    return direct


def nef_claims(n: int) -> list[dict]:
    """The two nef classes and two effective classes used for O_X(j), 0 <= j <= n - 3."""
    rows = []
    for j in range(n - 2):
        phi_nef = DivClassY(0, -(2 * j + 1), -j)
        psi_nef = DivClassY(0, 2 * j - 2 * n + 5, j - n + 3)
        phi_eff = DivClassY(0, 2 * n - 5 - 2 * j, n - 3 - j)
        psi_eff = DivClassY(0, 2 * j + 1, j)
        rows.append({
            "j": j,
            "phi_nef": relative_nef(phi_nef),
            "phi_nef_pairings": (pair(phi_nef, L1P), pair(phi_nef, L2)),
            "psi_nef": relative_nef(psi_nef),
            "psi_nef_pairings": (pair(psi_nef, L1P), pair(psi_nef, L2)),
            "phi_effective": phi_eff.is_effective_exceptional(),
            "psi_effective": psi_eff.is_effective_exceptional(),
        })
    return rows


def picard_relation_check() -> dict:
    plus = plus_hyperplane()
    return {
        "f_plus_O1": plus.to_list(),
        "pair_l1'": pair(plus, L1P),
        "pair_l2": pair(plus, L2),
        "pair_fO1_l1'": pair(H, L1P),
        "pair_fO1_l2": pair(H, L2),
        # f^*O(1) + f^+*O(1) + 2E1' + E2 must vanish
        "identity_holds": H + plus + 2 * E1P + E2 == DivClassY(),
    }
