"""The one-shot verification suite behind `flopcheck verify-all`.

Each `check_*` function is self-contained and returns (ok, payload); the
acceptance tests call them directly.
"""
from __future__ import annotations

import math
import random

from .birational_lattice import (
    E1P,
    E2,
    H,
    INTERSECTION_TABLE,
    L1P,
    L2,
    canonical_coefficients,
    flop_dimensions,
    nef_claims,
    pair,
    picard_relation_check,
)
from .bott_engine import GrassmannData, HomogBundle, bott_cohomology, serre_dual
from .bundle_algebra import Line, O
from .flop_functor import (
    GeneratorSheaf,
    PlusBundle,
    WPLUS_SOURCES,
    eagon_northcott,
    filtration_ladder,
    hom_compare,
    k_class_report,
    p3_fibre_checks,
    phi_image,
    r1_functor_table,
    roundtrip_check,
    span_generators,
    vanishing_bookkeeping,
)
from .report import VerificationReport
from .total_space import TotalSpaceModel, generator_count, graded_hom, k_group_rank, spanning_gram

SERRE_SEED = 20240607


def check_bott_anchor():
    res = bott_cohomology(GrassmannData(2, 4), HomogBundle((0, -1), (1, 0)))
    return res.degree == 1 and res.dim == 1, res.to_dict()


def check_plucker(r: int, n: int):
    g = GrassmannData(r, n)
    res = bott_cohomology(g, HomogBundle.line(g, 1))
    return res.degree == 0 and res.dim == math.comb(n, r), {"h0": res.dim, "expected": math.comb(n, r)}


def projective_closed_form(m: int, k: int) -> dict[int, int]:
    if k >= 0:
        return {0: math.comb(m + k, k)}
    if k <= -m - 1:
        return {m: math.comb(-k - 1, m)}
    return {}


def check_projective_space(m: int):
    g = GrassmannData(1, m + 1)
    bad = []
    for k in range(-(2 * m + 2), 2 * m + 3):
        got = bott_cohomology(g, HomogBundle.line(g, k)).as_table()
        if got != projective_closed_form(m, k):
            bad.append(k)
    return not bad, {"m": m, "mismatches": bad}


def random_bundle(rng: random.Random, g: GrassmannData, lo: int = -4, hi: int = 4) -> HomogBundle:
    mu = sorted((rng.randint(lo, hi) for _ in range(g.rank_q)), reverse=True)
    lam = sorted((rng.randint(lo, hi) for _ in range(g.r)), reverse=True)
    return HomogBundle(tuple(mu), tuple(lam))


def check_serre(samples: int = 500, seed: int = SERRE_SEED):
    rng = random.Random(seed)
    grass = [GrassmannData(2, 4), GrassmannData(2, 5)]
    bad = []
    for idx in range(samples):
        g = grass[idx % 2]
        b = random_bundle(rng, g)
        x, y = bott_cohomology(g, b), bott_cohomology(g, serre_dual(g, b))
        if x.is_zero != y.is_zero or (not x.is_zero and (x.degree + y.degree != g.dim or x.dim != y.dim)):
            bad.append(str(b))
    return not bad, {"samples": samples, "seed": seed, "violations": bad}


def check_gram(n: int):
    matrix, det = spanning_gram(GrassmannData(2, n))
    return abs(det) == 1 and len(matrix) == math.comb(n, 2), {"matrix": matrix, "det": det}


def check_generator_count(lo: int = 4, hi: int = 8):
    counts = {n: (generator_count(n), k_group_rank(n)) for n in range(lo, hi + 1)}
    return all(a == b for a, b in counts.values()), counts


def check_remark1(cutoff: int = 2):
    m = TotalSpaceModel(GrassmannData(2, 4), "extended-cotangent")
    table = graded_hom(Line(2), O, m, cutoff)
    return table.entry(1, 1) == 1, table.to_dict()


def check_intersection_table():
    named = {"E1'": E1P, "E2": E2}
    curves = {"l1'": L1P, "l2": L2}
    out = []
    for (d, c), expected in INTERSECTION_TABLE.items():
        got = pair(named[d], curves[c])
        out.append(((d, c), got == expected, got))
    return out


def check_nef(n: int):
    rows = nef_claims(n)
    ok = all(r["phi_nef"] and r["psi_nef"] and r["phi_effective"] and r["psi_effective"] for r in rows)
    return ok, rows


def check_canonical(n: int):
    coeffs = canonical_coefficients(n)
    return coeffs == (2 * n - 4, n - 3), {"n": n, "coefficients": coeffs}


def check_r1_tables(lmax: int = 5, nmin: int = 2, nmax: int = 6):
    bad = []
    for n in range(nmin, nmax + 1):
        for l in range(-lmax, lmax + 1):
            t = r1_functor_table(l, n)
            if not (t["roundtrip"] and t["in_range"] and len(t["phi"]) == n):
                bad.append((l, n))
    return not bad, {"failures": bad}


def check_eagon_northcott(lo: int = 4, hi: int = 10):
    sums = {n: eagon_northcott(n).signed_rank_sum for n in range(lo, hi + 1)}
    ranks4 = eagon_northcott(4).ranks
    return all(s == 0 for s in sums.values()) and ranks4 == [3, 8, 6, 1], {"sums": sums, "ranks_n4": ranks4}


def expected_quotient(i: int, k: int, l: int) -> str:
    return f"O_E2({-i}E1' {-k:+d}E2) (x) f+^*O_X+({-k + l})"


def check_filtration(i: int):
    lad = filtration_ladder(i)
    want = [(k, l) for k in range(i) for l in range(k + 1)]
    ok = (
        len(lad.steps) == i * (i + 1) // 2
        and [(s.k, s.l) for s in lad.steps] == want
        and all(s.descriptor == expected_quotient(i, s.k, s.l) for s in lad.steps)
    )
    return ok, lad.to_dict()


def plus_bundle_generators(n: int) -> list[GeneratorSheaf]:
    gens = [GeneratorSheaf(i, j, n) for i, j in span_generators(n)]
    return [g for g in gens if isinstance(phi_image(g), PlusBundle)]


def hom_compare_all(n: int = 4, cutoff: int = 6) -> list[dict]:
    gens = plus_bundle_generators(n)
    out = []
    for g1 in gens:
        for g2 in gens:
            res = hom_compare(g1, g2, cutoff)
            res.pop("_tables")
            out.append(res)
    return out


def run_suite(n: int = 4, cutoff: int = 6) -> VerificationReport:
    rep = VerificationReport("verify-all", parameters={"r": 2, "n": n, "cutoff": cutoff})

    ok, payload = check_bott_anchor()
    rep.add("bott-anchor", "Ext^1(Q,S) = C", ok, payload)
    for r, m in [(1, 3), (2, 4), (2, 5), (3, 6)]:
        ok, payload = check_plucker(r, m)
        rep.add(f"plucker-anchor:G({r},{m})", "det Q = O_G(1); h^0(O(1)) = C(n,r)", ok, payload)
    for m in range(1, 6):
        ok, payload = check_projective_space(m)
        rep.add(f"projective-space:P{m}", "R(f2+)_* O_E2(tE2) = 0 for 0 < t <= n-3", ok, payload)
    ok, payload = check_serre()
    rep.add("serre-duality", "K_G = O(-n)", ok, payload)

    dims = flop_dimensions(2, n)
    ok = (dims.dim_G, dims.dim_X0, dims.dim_X, dims.dim_W) == (2 * n - 4, 4 * n - 8, 4 * n - 7, 3 * n - 5)
    rep.add(f"dims:G(2,{n})", "dim G = r(n-r), dim X = 2r(n-r)+1, dim W = 3n-5", ok, dims.to_dict())

    for m in sorted({4, 5, n}):
        ok, payload = check_gram(m)
        rep.add(f"span-gram:n={m}", "Sym^i S^* (x) O(j), i+j <= n-2: det Gram = +-1", ok, payload)
    ok, payload = check_generator_count()
    rep.add("span-count", "#{(i,j): i+j <= n-2} = C(n,2)", ok, payload)

    ok, payload = check_remark1()
    rep.add("remark1-hom1", "R^1 phi_* O_X(-2) != 0 => Hom^1(F,F) != 0", ok, payload)

    for (d, c), ok, got in check_intersection_table():
        rep.add(f"intersection-table:{d}.{c}", f"({d}.{c})={INTERSECTION_TABLE[(d, c)]}", ok, {"value": got})
    rep.add("intersection-table:H", "f^*O_X(1) is trivial on l1', l2",
            pair(H, L1P) == 0 and pair(H, L2) == 0, None)
    for m in range(4, 9):
        ok, payload = check_nef(m)
        rep.add(f"nef-effective:n={m}", "-(2j+1)E1'-jE2 and (2j-2n+5)E1'+(j-n+3)E2 nef", ok, payload)
    for m in range(4, 13):
        ok, payload = check_canonical(m)
        rep.add(f"canonical:n={m}", "K_Y = f^*K_X+(2n-4)E1'+(n-3)E2", ok, payload)
    pic = picard_relation_check()
    rep.add("picard-relation", "f^*O_X(1) = f+^*O_X+(-1) (x) O_Y(-2E1'-E2)",
            pic["identity_holds"] and pic["pair_l1'"] == 0 and pic["pair_l2"] == 1, pic)

    rt = roundtrip_check(4)
    rep.add("roundtrip:n=4", "Psi Phi(omega) = omega on the spanning class", rt["ok"], rt)
    ok, payload = check_r1_tables()
    rep.add("r1-table", "Phi_l: O_X(k) -> O_X+(-k), l-n+1 <= k <= l", ok, payload)
    ok, payload = check_eagon_northcott()
    rep.add("eagon-northcott", "signed rank sum 0; n=4 ranks [3,8,6,1]", ok, payload)
    for i in range(1, 7):
        ok, payload = check_filtration(i)
        rep.add(f"filtration:i={i}", "F^{k,l}/F^{k,l+1} = O_E2(-iE1'-kE2) (x) f+^*O_X+(-k+l)", ok, payload)

    for m in sorted({4, 5, n}):
        vb = vanishing_bookkeeping(m)
        rep.add(f"vanishing:n={m}", "higher direct images vanish along f1, f2",
                vb["e2_fibre_vanishing"] and vb["phi_e1_pushforward"] and vb["psi_e1_pushforward"], vb)
    p3 = p3_fibre_checks()
    rep.add("p3-fibres", "O_P0'(4E1'+E2) = O_P3(-2)",
            p3["deg_4E1'+E2"] == -2 and p3["cokernel_piece_equals_4E1'+E2"] and p3["vanishing"], p3)

    for res in hom_compare_all(4, cutoff):
        a, b = res["g1"], res["g2"]
        rep.add(f"hom-compare:({a['i']},{a['j']})-({b['i']},{b['j']})",
                "Hom^p(omega1, omega2) vs Hom^p(Phi omega1, Phi omega2)", "reported", res)
    for src in WPLUS_SOURCES:
        rep.add(f"k-class:ideal-twist:{src}", "[I_W+ (x) O_X+(-2)] in K(X+)", "reported", k_class_report(4, src))
    return rep
