import math

import pytest

from flopcheck.errors import DomainError, UnsupportedError
from flopcheck.flop_functor import (
    EPlus,
    GeneratorSheaf,
    IdealTwist,
    PlusBundle,
    WPLUS_SOURCES,
    blowup_pushforward_trivial,
    eagon_northcott,
    filtration_ladder,
    hom_compare,
    k_class_report,
    p3_fibre_checks,
    phi_image,
    projective_vanishing,
    psi_image,
    r1_functor_table,
    roundtrip_check,
    vanishing_bookkeeping,
)
from flopcheck.total_space import span_generators


class TestPhi:
    def test_examples(self):
        assert phi_image(GeneratorSheaf(0, 1, 4)) == PlusBundle(0, 1)
        assert phi_image(GeneratorSheaf(0, 2, 4)) == IdealTwist(4)
        img = phi_image(GeneratorSheaf(2, 0, 4))
        assert img == EPlus(2, 4) and img.twist == 0

    @pytest.mark.parametrize("n", range(4, 9))
    def test_case_split(self, n):
        for i, j in span_generators(n):
            img = phi_image(GeneratorSheaf(i, j, n))
            if i + j <= n - 3:
                assert img == PlusBundle(i, j)
            elif i == 0:
                assert img == IdealTwist(n) and img.twist == -n + 2
            else:
                assert img == EPlus(i, n) and img.twist == -n + 2 + i

    def test_injective_n4(self):
        imgs = [phi_image(GeneratorSheaf(i, j, 4)) for i, j in span_generators(4)]
        assert len(set(imgs)) == 6

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            GeneratorSheaf(2, 1, 4)

    def test_serialisation(self):
        assert PlusBundle(1, 0).to_dict()["kind"] == "plus-bundle"
        assert IdealTwist(4).to_dict()["kind"] == "ideal-twist"
        d = EPlus(1, 4).to_dict()
        assert d["kind"] == "e-plus"
        assert d["sequence"] == "0 -> E+_1 (x) O(-1) -> Sym^1 S+ (x) O(-1) -> O_W+ (x) O(-2) -> 0"


class TestPsi:
    def test_examples(self):
        assert psi_image(PlusBundle(0, 1)) == GeneratorSheaf(0, 1, 4)
        assert psi_image(IdealTwist(4)) == GeneratorSheaf(0, 2, 4)
        assert psi_image(EPlus(1, 4)) == GeneratorSheaf(1, 1, 4)

    def test_general_n_restricted(self):
        assert psi_image(PlusBundle(1, 2), n=6) == GeneratorSheaf(1, 2, 6)
        with pytest.raises(UnsupportedError):
            psi_image(IdealTwist(5), n=5)
        with pytest.raises(UnsupportedError):
            psi_image(EPlus(3, 5), n=5)
        with pytest.raises(UnsupportedError):
            psi_image(PlusBundle(1, 2), n=4)


def test_roundtrip_n4():
    rep = roundtrip_check(4)
    assert rep["ok"] and rep["injective"]
    assert len(rep["chains"]) == 6
    chain = {(c["generator"]["i"], c["generator"]["j"]): c["image"]["kind"] for c in rep["chains"]}
    assert chain[(0, 0)] == "plus-bundle"
    assert chain[(0, 2)] == "ideal-twist"
    assert chain[(2, 0)] == "e-plus"


class TestR1:
    def test_l0_n2(self):
        t = r1_functor_table(0, 2)
        assert t["phi"] == {-1: 1, 0: 0}

    def test_l3_n4(self):
        assert sorted(r1_functor_table(3, 4)["phi"]) == [0, 1, 2, 3]

    @pytest.mark.parametrize("n", range(2, 7))
    @pytest.mark.parametrize("l", range(-5, 6))
    def test_roundtrip(self, l, n):
        t = r1_functor_table(l, n)
        assert len(t["phi"]) == n
        assert all(t["psi"][t["phi"][k]] == k for k in t["phi"])
        assert t["in_range"]


class TestEagonNorthcott:
    def test_n4(self):
        en = eagon_northcott(4)
        assert en.ranks == [3, 8, 6, 1]
        assert en.signs == [-1, 1, -1, 1]
        assert en.signed_rank_sum == 0

    def test_n5(self):
        assert eagon_northcott(5).ranks == [4, 15, 20, 10, 1]

    @pytest.mark.parametrize("n", range(4, 11))
    def test_rank_formula(self, n):
        en = eagon_northcott(n)
        assert en.signed_rank_sum == 0
        assert len(en.terms) == n
        assert en.ranks[:-2] == [(k + 1) * math.comb(n, k + 2) for k in range(n - 2, 0, -1)]
        assert en.ranks[-2:] == [math.comb(n, 2), 1]

    def test_domain(self):
        with pytest.raises(DomainError):
            eagon_northcott(3)


class TestLadder:
    def test_i1(self):
        lad = filtration_ladder(1)
        assert [(s.k, s.l) for s in lad.steps] == [(0, 0)]
        s = lad.steps[0]
        assert (s.e1, s.e2, s.plus_twist) == (-1, 0, 0)

    def test_i2_chain(self):
        assert filtration_ladder(2).chain() == [(0, 0), (1, 0), (1, 1), (2, 0)]

    @pytest.mark.parametrize("i", range(1, 7))
    def test_counts_and_quotients(self, i):
        lad = filtration_ladder(i)
        assert len(lad.steps) == i * (i + 1) // 2
        for s in lad.steps:
            assert 0 <= s.l <= s.k < i
            assert (s.e1, s.e2, s.plus_twist) == (-i, -s.k, -s.k + s.l)

    def test_domain(self):
        with pytest.raises(DomainError):
            filtration_ladder(0)


class TestHomCompare:
    def test_identity_pair(self):
        res = hom_compare(GeneratorSheaf(0, 0), GeneratorSheaf(0, 0), 2)
        assert res["minus"]["entries"] == res["plus"]["entries"]
        assert res["shift_analysis"]["identical"]

    def test_o_to_o1(self):
        res = hom_compare(GeneratorSheaf(0, 0), GeneratorSheaf(0, 1), 1)
        minus, plus = res["_tables"]
        assert minus.entry(0, 0) == 6
        assert "shift_analysis" in res
        assert plus.cutoff == 1

    def test_end_of_s_dual(self):
        minus, _ = hom_compare(GeneratorSheaf(1, 0), GeneratorSheaf(1, 0), 0)["_tables"]
        assert minus.entry(0, 0) == 1

    def test_unsupported_pair(self):
        with pytest.raises(UnsupportedError):
            hom_compare(GeneratorSheaf(0, 2), GeneratorSheaf(0, 0), 1)


class TestKClass:
    @pytest.mark.parametrize("src", WPLUS_SOURCES)
    def test_report_shape(self, src):
        rep = k_class_report(4, src)
        assert rep["ideal_twist_rank"] == 1
        assert rep["wplus_class_rank"] == 0
        assert len(rep["ideal_twist_pairing_row"]) == 6

    def test_divisor_needs_n4(self):
        with pytest.raises(UnsupportedError):
            k_class_report(5, "divisor")


class TestVanishing:
    def test_projective(self):
        assert projective_vanishing(3, 2)
        assert not projective_vanishing(3, 4)

    def test_blowup_range(self):
        assert blowup_pushforward_trivial(5, 4)
        assert not blowup_pushforward_trivial(5, 5)

    @pytest.mark.parametrize("n", range(4, 9))
    def test_bookkeeping(self, n):
        vb = vanishing_bookkeeping(n)
        assert vb["e2_fibre_vanishing"] and vb["phi_e1_pushforward"] and vb["psi_e1_pushforward"]

    def test_p3(self):
        rep = p3_fibre_checks()
        assert rep["deg_4E1'+E2"] == -2
        assert rep["cokernel_piece_equals_4E1'+E2"]
        assert rep["vanishing"]
