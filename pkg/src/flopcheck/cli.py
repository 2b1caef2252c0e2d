"""Command line entry point: `flopcheck <subcommand> [options]`."""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .birational_lattice import (
    INTERSECTION_TABLE,
    CurveClassY,
    DivClassY,
    flop_dimensions,
    pair,
    relative_nef,
)
from .bott_engine import GrassmannData, HomogBundle, bott_cohomology, euler_char
from .bundle_algebra import Ext, normalize, parse_expr, sym_of_graded_extension
from .errors import FlopcheckError
from .flop_functor import (
    GeneratorSheaf,
    eagon_northcott,
    filtration_ladder,
    hom_compare,
    phi_image,
    r1_functor_table,
    roundtrip_check,
    span_generators,
)
from .report import canonical, format_report
from .schur_core import format_weight, parse_weight
from .total_space import DEFAULT_CUTOFF, TotalSpaceModel, graded_hom, spanning_gram
from .verify import run_suite

SUBCOMMANDS = (
    "cohomology", "euler", "normalize", "graded-hom", "gram", "intersection", "dims",
    "functor-table", "roundtrip", "eagon-northcott", "filtration", "hom-compare", "verify-all",
)


@dataclass
class CommandConfig:
    subcommand: str
    r: int = 2
    n: int = 4
    cutoff: int = DEFAULT_CUTOFF
    format: str = "text"
    output: str | None = None
    extra: dict = field(default_factory=dict)


def default_cutoff() -> int:
    env = os.environ.get("FLOPCHECK_CUTOFF")
    return int(env) if env else DEFAULT_CUTOFF


def _pair_arg(text: str) -> tuple[int, int]:
    try:
        parts = tuple(int(t) for t in text.replace("−", "-").split(","))
    except ValueError:
        parts = ()
    if len(parts) != 2:
        raise FlopcheckError(f"expected two comma-separated integers, got {text!r}")
    return parts


def _grass(cfg: CommandConfig) -> GrassmannData:
    g = cfg.extra.get("g")
    if g:
        r, n = _pair_arg(g)
        return GrassmannData(r, n)
    return GrassmannData(cfg.r, cfg.n)


def _bundle(cfg: CommandConfig) -> HomogBundle:
    return HomogBundle(parse_weight(cfg.extra["mu"]), parse_weight(cfg.extra["lambda"]))


def cmd_cohomology(cfg):
    g, b = _grass(cfg), _bundle(cfg)
    res = bott_cohomology(g, b)
    if res.is_zero:
        text = f"H^*({g}, {b}) = 0"
    else:
        text = f"degree {res.degree}, rep ({format_weight(res.rep)}), dim {res.dim}"
    return res.to_dict(), text


def cmd_euler(cfg):
    g, b = _grass(cfg), _bundle(cfg)
    chi = euler_char(g, b)
    return {"chi": chi}, f"chi = {chi}"


def cmd_normalize(cfg):
    g = _grass(cfg)
    e = parse_expr(cfg.extra["expr"])
    k = cfg.extra.get("sym_ext")
    nf = sym_of_graded_extension(k, e, g) if k is not None and isinstance(e, Ext) else normalize(e, g)
    lines = [f"  {m} x Q[{format_weight(b.mu)}] S[{format_weight(b.lam)}]  (rank {b.rank})" for b, m in nf]
    lines.append(f"rank {nf.rank}" + (" (associated graded)" if nf.via_graded else ""))
    return nf.to_dict(), "\n".join(lines)


def _table_text(table) -> str:
    lines = [f"exactness: {table.exactness}, cutoff {table.cutoff}"]
    for p in table.degrees():
        lines.append(f"  p={p}: " + " ".join(str(x) for x in table.column(p)))
    if not table.degrees():
        lines.append("  all entries zero")
    return "\n".join(lines)


def cmd_graded_hom(cfg):
    g = _grass(cfg)
    m = TotalSpaceModel(g, cfg.extra["kind"], cfg.extra["side"])
    table = graded_hom(parse_expr(cfg.extra["a"]), parse_expr(cfg.extra["b"]), m, cfg.cutoff)
    return table.to_dict(), _table_text(table)


def cmd_gram(cfg):
    g = _grass(cfg)
    gens = span_generators(g.n)
    matrix, det = spanning_gram(g, gens)
    lines = [f"generators (i,j): {gens}"] + ["  " + " ".join(f"{x:4d}" for x in row) for row in matrix]
    lines.append(f"det = {det}")
    return {"generators": gens, "matrix": matrix, "det": det}, "\n".join(lines)


def cmd_intersection(cfg):
    payload = {"table": {f"{d}.{c}": v for (d, c), v in INTERSECTION_TABLE.items()}}
    lines = [f"({d}.{c}) = {v}" for (d, c), v in INTERSECTION_TABLE.items()]
    if cfg.extra.get("divisor"):
        d = DivClassY(*(Fraction(x) for x in cfg.extra["divisor"].split(",")))
        curve = cfg.extra.get("curve")
        if curve:
            c = CurveClassY(*(Fraction(x) for x in curve.split(",")))
            payload["pairing"] = pair(d, c)
            lines.append(f"({d}).curve = {payload['pairing']}")
        payload["nef"] = relative_nef(d)
        lines.append(f"{d} relatively nef: {payload['nef']}")
    return payload, "\n".join(lines)


def cmd_dims(cfg):
    d = flop_dimensions(cfg.r, cfg.n)
    return d.to_dict(), f"dim G = {d.dim_G}, dim X0 = {d.dim_X0}, dim X = {d.dim_X}, dim W = {d.dim_W}"


def cmd_functor_table(cfg):
    if cfg.r == 1:
        t = r1_functor_table(cfg.extra.get("l", 0), cfg.n)
        lines = [f"O_X({k}) -> O_X+({v})" for k, v in t["phi"].items()]
        return t, "\n".join(lines)
    rows, lines = [], []
    for i, j in span_generators(cfg.n):
        g = GeneratorSheaf(i, j, cfg.n)
        img = phi_image(g)
        rows.append({"generator": g.to_dict(), "image": img.to_dict()})
        lines.append(f"Phi({g}) = {img}")
    return {"n": cfg.n, "table": rows}, "\n".join(lines)


def cmd_roundtrip(cfg):
    rt = roundtrip_check(cfg.n)
    lines = [f"({c['generator']['i']},{c['generator']['j']}) -> {c['image']['kind']} -> "
             f"({c['back']['i']},{c['back']['j']}) {'ok' if c['ok'] else 'MISMATCH'}" for c in rt["chains"]]
    return rt, "\n".join(lines)


def cmd_eagon_northcott(cfg):
    en = eagon_northcott(cfg.n)
    lines = [f"{'+' if t.sign > 0 else '-'} rank {t.rank:4d}  {t.description}" for t in en.terms]
    lines.append(f"signed rank sum {en.signed_rank_sum}")
    return en.to_dict(), "\n".join(lines)


def cmd_filtration(cfg):
    lad = filtration_ladder(cfg.extra.get("i", 1))
    lines = [f"F^({s.k},{s.l})/next = {s.descriptor}" for s in lad.steps] + [lad.bottom]
    return lad.to_dict(), "\n".join(lines)


def cmd_hom_compare(cfg):
    g1 = GeneratorSheaf(*_pair_arg(cfg.extra["g1"]), cfg.n)
    g2 = GeneratorSheaf(*_pair_arg(cfg.extra["g2"]), cfg.n)
    res = hom_compare(g1, g2, cfg.cutoff)
    minus, plus = res.pop("_tables")
    text = "\n".join([
        f"X side: Hom({g1}, {g2})", _table_text(minus),
        f"X+ side: Hom({phi_image(g1)}, {phi_image(g2)})", _table_text(plus),
        f"uniform shifts: {res['shift_analysis']['uniform_shifts']}",
    ])
    return res, text


HANDLERS = {
    "cohomology": cmd_cohomology,
    "euler": cmd_euler,
    "normalize": cmd_normalize,
    "graded-hom": cmd_graded_hom,
    "gram": cmd_gram,
    "intersection": cmd_intersection,
    "dims": cmd_dims,
    "functor-table": cmd_functor_table,
    "roundtrip": cmd_roundtrip,
    "eagon-northcott": cmd_eagon_northcott,
    "filtration": cmd_filtration,
    "hom-compare": cmd_hom_compare,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, default=2)
    common.add_argument("--n", type=int, default=4)
    common.add_argument("--cutoff", type=int, default=None, help="grading cutoff (env FLOPCHECK_CUTOFF)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", default=None, help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="flopcheck", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in ("cohomology", "euler"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--g", help="r,n")
        p.add_argument("--mu", required=True, help="weight on Q, e.g. 0,-1")
        p.add_argument("--lambda", dest="lambda_", required=True, help="weight on S, e.g. 1,0")
    p = sub.add_parser("normalize", parents=[common])
    p.add_argument("--g")
    p.add_argument("--expr", required=True)
    p.add_argument("--sym-ext", type=int, default=None, help="Sym^k of an ext(...) expression")
    p = sub.add_parser("graded-hom", parents=[common])
    p.add_argument("--g")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--kind", choices=("cotangent", "extended-cotangent"), default="extended-cotangent")
    p.add_argument("--side", choices=("minus", "plus"), default="minus")
    p = sub.add_parser("gram", parents=[common])
    p.add_argument("--g")
    p = sub.add_parser("intersection", parents=[common])
    p.add_argument("--divisor", help="c_H,c_1,c_2 in the basis f^*O_X(1), E1', E2")
    p.add_argument("--curve", help="a,b in the basis l1', l2")
    sub.add_parser("dims", parents=[common])
    p = sub.add_parser("functor-table", parents=[common])
    p.add_argument("--l", type=int, default=0, help="twist parameter for r = 1")
    sub.add_parser("roundtrip", parents=[common])
    sub.add_parser("eagon-northcott", parents=[common])
    p = sub.add_parser("filtration", parents=[common])
    p.add_argument("--i", type=int, default=1)
    p = sub.add_parser("hom-compare", parents=[common])
    p.add_argument("--g1", required=True, help="i,j")
    p.add_argument("--g2", required=True, help="i,j")
    sub.add_parser("verify-all", parents=[common])
    return parser


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    extra = {k: v for k, v in vars(args).items()
             if k not in ("subcommand", "r", "n", "cutoff", "format", "output") and v is not None}
    if "lambda_" in extra:
        extra["lambda"] = extra.pop("lambda_")
    cutoff = args.cutoff if args.cutoff is not None else default_cutoff()
    return CommandConfig(args.subcommand, args.r, args.n, cutoff, args.format, args.output, extra)


def run(cfg: CommandConfig) -> tuple[int, str]:
    if cfg.subcommand == "verify-all":
        rep = run_suite(cfg.n, cfg.cutoff)
        return rep.exit_status, format_report(rep, cfg.format)
    payload, text = HANDLERS[cfg.subcommand](cfg)
    if cfg.format == "json":
        doc = {"command": cfg.subcommand, "parameters": {"r": cfg.r, "n": cfg.n, "cutoff": cfg.cutoff},
               "result": payload}
        return 0, json.dumps(canonical(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    return 0, text + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    try:
        status, out = run(cfg)
    except ValueError as exc:  # FlopcheckError, or a malformed integer
        print(f"flopcheck {cfg.subcommand}: {exc}", file=sys.stderr)
        return 2
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
