from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flopcheck.birational_lattice import (
    E1P,
    E2,
    H,
    L1P,
    L2,
    CurveClassY,
    DivClassY,
    canonical_coefficients,
    flop_dimensions,
    nef_claims,
    pair,
    picard_relation_check,
    plus_hyperplane,
    relative_nef,
)
from flopcheck.errors import DomainError

ints = st.integers(-20, 20)
divisors = st.builds(DivClassY, ints, ints, ints)
curves = st.builds(CurveClassY, st.integers(0, 10), st.integers(0, 10))


def test_table():
    assert [[pair(d, c) for c in (L1P, L2)] for d in (E1P, E2)] == [[-1, 0], [2, -1]]
    assert pair(H, L1P) == 0 and pair(H, L2) == 0


@given(divisors, divisors, curves, ints)
def test_bilinear(d1, d2, c, s):
    assert pair(d1 + d2, c) == pair(d1, c) + pair(d2, c)
    assert pair(s * d1, c) == s * pair(d1, c)


@given(divisors, divisors)
def test_nef_cone_closed_under_sums(d1, d2):
    if relative_nef(d1) and relative_nef(d2):
        assert relative_nef(d1 + d2)


@pytest.mark.parametrize("j", range(6))
def test_phi_nef_class(j):
    d = DivClassY(0, -(2 * j + 1), -j)
    assert relative_nef(d)
    assert (pair(d, L1P), pair(d, L2)) == (1, j)


@pytest.mark.parametrize("n", range(4, 9))
def test_psi_nef_class(n):
    for j in range(n - 2):
        d = DivClassY(0, 2 * j - 2 * n + 5, j - n + 3)
        assert relative_nef(d)
        assert (pair(d, L1P), pair(d, L2)) == (1, n - 3 - j)


@pytest.mark.parametrize("n", range(4, 9))
def test_nef_claims_and_effectivity(n):
    rows = nef_claims(n)
    assert len(rows) == n - 2
    assert all(r["phi_nef"] and r["psi_nef"] and r["phi_effective"] and r["psi_effective"] for r in rows)


def test_e2_not_nef():
    assert not relative_nef(E2)
    assert pair(E2, L2) == -1


@pytest.mark.parametrize("n, expected", [(4, (4, 1)), (5, (6, 2)), (6, (8, 3))])
def test_canonical_examples(n, expected):
    assert canonical_coefficients(n) == expected


@pytest.mark.parametrize("n", range(4, 13))
def test_canonical_two_routes(n):
    d = flop_dimensions(2, n)
    assert canonical_coefficients(n) == (d.dim_X - d.dim_G - 1, d.dim_X - d.dim_W - 1) == (2 * n - 4, n - 3)


def test_canonical_domain():
    with pytest.raises(DomainError):
        canonical_coefficients(3)


def test_dimensions():
    d = flop_dimensions(2, 4)
    assert (d.dim_G, d.dim_X0, d.dim_X, d.dim_W) == (4, 8, 9, 7)
    d = flop_dimensions(1, 2)
    assert (d.dim_G, d.dim_X0, d.dim_X, d.dim_W) == (1, 2, 3, 1)
    for n in range(4, 12):
        assert flop_dimensions(2, n).dim_W == 3 * n - 5
        assert flop_dimensions(2, n).dim_X == 4 * n - 7
    with pytest.raises(DomainError):
        flop_dimensions(3, 5)


def test_picard_relation():
    rep = picard_relation_check()
    assert rep["identity_holds"]
    assert rep["pair_l1'"] == 0
    assert rep["pair_l2"] == 1
    assert rep["pair_fO1_l1'"] == 0
    assert plus_hyperplane() == DivClassY(-1, -2, -1)


def test_rational_coefficients():
    d = DivClassY(0, Fraction(1, 2), 0)
    assert pair(d, L1P) == Fraction(-1, 2)
    assert d.to_list() == ["0", "1/2", "0"]


def test_curves_in_cone():
    with pytest.raises(DomainError):
        CurveClassY(-1, 0)
