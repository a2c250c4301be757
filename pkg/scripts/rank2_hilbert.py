"""Hilbert basis of barF over connected rank-2 matroids.

A connected rank-2 matroid on n elements is determined by the sizes of its
parallel classes, a partition lambda of n with at least three parts.  For
each n the script reports which lambdas are indecomposable and a witness
sum for the rest.
"""
import sys

from matqsym.decomp import SemigroupInstance, hilbert_basis
from matqsym.matroid import rank2_matroid


def partitions(n, min_parts=3):
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            if len(acc) >= min_parts:
                out.append(tuple(acc))
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(n, n, [])
    return out


def main(nmax=7):
    for n in range(4, nmax + 1):
        lams = partitions(n)
        inst = SemigroupInstance.from_matroids([rank2_matroid(l) for l in lams], lams)
        res = hilbert_basis(inst)
        print(f"n={n}: {len(lams)} classes, {len(res.indecomposable)} indecomposable"
              + ("" if res.complete else f", {len(res.undecided)} undecided"))
        for lam in lams:
            if lam in res.decomposable:
                print(f"  {lam}  = " + " + ".join(map(str, res.decomposable[lam])))
            elif lam in res.undecided:
                print(f"  {lam}  undecided")
            else:
                print(f"  {lam}  indecomposable")
        three = sorted(l for l in lams if len(l) == 3)
        print("  indecomposables are exactly the three-part lambdas:",
              sorted(res.indecomposable) == three)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 7)
