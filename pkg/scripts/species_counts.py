"""Count structures of a species expression and compare with brute-force enumeration."""

import argparse
import math
from fractions import Fraction

from structypes.finset import LabeledSet
from structypes.parse import parse_species
from structypes.species import count, enumerate_structures


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("expr", nargs="?", default="let B = 1 + Z*B^2; B")
    p.add_argument("--max-n", type=int, default=6)
    args = p.parse_args()

    expr, sys = parse_species(args.expr)
    print(f"{'n':>2} {'count':>10} {'enumerated':>10} {'count/n!':>10}")
    for n in range(args.max_n + 1):
        c = count(expr, sys, n)
        listed = len(enumerate_structures(expr, sys, LabeledSet.canonical(n))) if n <= 6 else "-"
        print(f"{n:>2} {c:>10} {listed:>10} {str(Fraction(c, math.factorial(n))):>10}")


if __name__ == "__main__":
    main()
