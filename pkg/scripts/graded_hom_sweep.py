"""Tabulate graded Hom between line bundles on the extended cotangent model.

Rows are (p, k) with nonzero dimension; useful for eyeballing where
higher Ext classes first appear as the twist difference grows.
"""
import argparse

from flopcheck.bott_engine import GrassmannData
from flopcheck.bundle_algebra import Line, O
from flopcheck.total_space import KINDS, TotalSpaceModel, graded_hom


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--cutoff", type=int, default=3)
    ap.add_argument("--max-twist", type=int, default=3)
    ap.add_argument("--kind", choices=KINDS, default="extended-cotangent")
    args = ap.parse_args()

    model = TotalSpaceModel(GrassmannData(2, args.n), args.kind)
    for j in range(-args.max_twist, args.max_twist + 1):
        table = graded_hom(Line(j), O, model, args.cutoff)
        nonzero = [tuple(e) for e in table.to_dict()["entries"]]
        higher = [e for e in nonzero if e[0] > 0]
        print(f"Hom(O({j}), O) [{table.exactness}]: {len(nonzero)} nonzero, higher: {higher}")


if __name__ == "__main__":
    main()
