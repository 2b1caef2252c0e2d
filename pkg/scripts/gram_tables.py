"""Print the Euler Gram matrix of the spanning set on G(2,n) and its determinant."""
import argparse

from flopcheck.bott_engine import GrassmannData
from flopcheck.total_space import span_generators, spanning_gram


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("ns", type=int, nargs="*", default=[4, 5, 6])
    for n in ap.parse_args().ns:
        gens = span_generators(n)
        matrix, det = spanning_gram(GrassmannData(2, n))
        print(f"G(2,{n}): {len(gens)} generators, det = {det}")
        for (i, j), row in zip(gens, matrix):
            print(f"  ({i},{j}) " + " ".join(f"{x:6d}" for x in row))


if __name__ == "__main__":
    main()
