"""Print Chern classes and Euler characteristics of smooth hypersurfaces.

Each row is computed twice, through iterated V on the signed skeletal
species and through the adjunction formula, and the two are compared.
"""

import argparse

from structypes.chern import HypersurfaceSpec, adjunction_oracle, chern_hypersurface, euler_char


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-d", type=int, default=6)
    args = p.parse_args()

    print(f"{'n':>2} {'d':>2} {'chi':>8}  c(X)")
    mismatches = 0
    for n in range(2, args.max_n + 1):
        for d in range(1, args.max_d + 1):
            spec = HypersurfaceSpec(n, d)
            c = chern_hypersurface(spec)
            ok = c == adjunction_oracle(spec)
            mismatches += not ok
            print(f"{n:>2} {d:>2} {euler_char(spec):>8}  {c}{'' if ok else '  MISMATCH'}")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
