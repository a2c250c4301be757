"""Indecomposables among connected rank-3 matroids on six elements.

Finds the Hilbert basis of the semigroup generated by barF over the catalog,
then searches for labellings a..e of the five indecomposables under which
the Tutte-equal pair (M_1, M_2) satisfies

    barF(M_i) = b + c + 2d = 2a + e = a + 3d.

It also reports parallel classes of each indecomposable and which of the
identities are realised by weak images of M_1 and M_2.
"""
from itertools import combinations, permutations

from matqsym.catalog import enumerate_matroids, is_isomorphic, weak_images
from matqsym.decomp import SemigroupInstance, barF, hilbert_basis
from matqsym.io import matroid_to_json
from matqsym.matroid import tutte


def parallel_classes(M):
    classes = []
    for e in M.ground:
        for c in classes:
            if M.rank_of({e, c[0]}) == 1:
                c.append(e)
                break
        else:
            classes.append([e])
    return sorted((c for c in classes if len(c) > 1), key=len, reverse=True)


def realised_by_weak_images(M, pieces):
    """Is each required piece isomorphic to some connected weak image of M?"""
    imgs = weak_images(M, connected_only=True)
    return all(any(is_isomorphic(P, W) for W in imgs) for P in pieces)


def main():
    cat = enumerate_matroids(6, 3, connected_only=True)
    print(f"connected rank-3 matroids on 6 elements: {len(cat)}")
    inst = SemigroupInstance.from_matroids(cat, range(len(cat)))
    res = hilbert_basis(inst)
    ind = res.indecomposable
    print(f"indecomposable catalog indices: {ind}")
    for i in ind:
        print(f"  [{i}] bases={len(cat[i].bases)} parallel={parallel_classes(cat[i])} {matroid_to_json(cat[i])}")
    for i, w in sorted(res.decomposable.items()):
        print(f"  [{i}] = " + " + ".join(f"[{x}]" for x in w))

    pairs = [
        (a, b) for a, b in combinations(range(len(cat)), 2)
        if tutte(cat[a]) == tutte(cat[b]) and not is_isomorphic(cat[a], cat[b])
    ]
    print(f"Tutte-equal non-isomorphic pairs: {pairs}")
    v = {i: barF(cat[i]) for i in range(len(cat))}
    for m1, m2 in pairs:
        assert v[m1] == v[m2]
        target = v[m1]
        fits = []
        for a, b, c, d, e in permutations(ind):
            if b > c:
                continue  # b and c play symmetric roles
            if (v[b] + v[c] + 2 * v[d] == target and 2 * v[a] + v[e] == target
                    and v[a] + 3 * v[d] == target):
                fits.append(dict(a=a, b=b, c=c, d=d, e=e))
        print(f"pair {m1},{m2}: labellings satisfying all three identities: {fits}")
        for lab in fits:
            ids = {
                "b+c+2d": [cat[lab["b"]], cat[lab["c"]], cat[lab["d"]]],
                "2a+e": [cat[lab["a"]], cat[lab["e"]]],
                "a+3d": [cat[lab["a"]], cat[lab["d"]]],
            }
            for m in (m1, m2):
                got = {k: realised_by_weak_images(cat[m], P) for k, P in ids.items()}
                print(f"  M=[{m}] pieces available as weak images: {got}")


if __name__ == "__main__":
    main()
