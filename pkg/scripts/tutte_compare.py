"""Rank-3 matroids with equal Tutte polynomials: does F tell them apart?

For n = 6 and n = 7, group the rank-3 matroids by Tutte polynomial and, for
each non-isomorphic pair in a group, report whether F agrees and, if not,
the fundamental coefficients where the two expansions differ.
"""
import sys
from itertools import combinations

from matqsym.catalog import enumerate_matroids, is_isomorphic
from matqsym.invariant import F
from matqsym.io import matroid_to_json
from matqsym.matroid import tutte
from matqsym.qsym import FUNDAMENTAL


def compare(n):
    cat = enumerate_matroids(n, 3)
    groups = {}
    for i, M in enumerate(cat):
        groups.setdefault(str(tutte(M)), []).append(i)
    Fs = {}
    print(f"n={n}: {len(cat)} rank-3 matroids, {len(groups)} Tutte polynomials")
    for group in groups.values():
        for a, b in combinations(group, 2):
            if is_isomorphic(cat[a], cat[b]):
                continue
            fa = Fs.setdefault(a, F(cat[a]).to(FUNDAMENTAL))
            fb = Fs.setdefault(b, F(cat[b]).to(FUNDAMENTAL))
            if fa == fb:
                print(f"  [{a}, {b}] equal F")
                continue
            diff = sorted(
                (alpha, fa.coefficient(alpha), fb.coefficient(alpha))
                for alpha in set(fa.terms) | set(fb.terms)
                if fa.coefficient(alpha) != fb.coefficient(alpha)
            )
            print(f"  [{a}, {b}] F differs in {len(diff)} L-coefficients")
            for alpha, ca, cb in diff:
                print(f"      L{list(alpha)}: {ca} vs {cb}")
            print(f"    {matroid_to_json(cat[a])}")
            print(f"    {matroid_to_json(cat[b])}")


def main(ns):
    for n in ns:
        compare(n)


if __name__ == "__main__":
    main([int(x) for x in sys.argv[1:]] or [6, 7])
