"""Print the R, Q and L change-of-basis matrices and a few structure constants.

A_n has the L-expansions of the R_sigma enumerators as columns, L_n those of
the Q_sigma enumerators, and U_n the Q-expansions of the R_sigma.  The script
checks A_n = L_n U_n with L_n lower and U_n upper unitriangular, then prints
products whose expansions have negative coefficients.
"""
import sys

from matqsym.appendix import (
    comp_label,
    expand,
    format_matrix,
    is_lower_unitriangular,
    is_upper_unitriangular,
    lu_matrices,
    matmul,
    p_enumerator,
    q_enumerator,
    r_enumerator,
)
from matqsym.posets import stanley_index_composition


def show(n):
    d = lu_matrices(n)
    rows = [comp_label(a) for a in d["compositions"]]
    cols = ["R" + s for s in d["sigmas"]]
    print(f"A_{n} (R in L)\n" + format_matrix(d["A"], rows, cols) + "\n")
    print(f"L_{n} (Q in L)\n" + format_matrix(d["L"], rows, ["Q" + s for s in d["sigmas"]]) + "\n")
    print(f"U_{n} (R in Q)\n" + format_matrix(d["U"], ["Q" + s for s in d["sigmas"]], cols) + "\n")
    ok = (is_lower_unitriangular(d["L"]) and is_upper_unitriangular(d["U"])
          and matmul(d["L"], d["U"]) == d["A"])
    print(f"A_{n} = L_{n} U_{n} with unitriangular factors: {ok}\n")


def structure_constants():
    R01 = r_enumerator("01")
    print("R01 * R01 =", expand(R01 * R01, "R"))
    Q010 = q_enumerator("010")
    print("Q010 * Q010 =", expand(Q010 * Q010, "Q"))
    lhs = p_enumerator((1, 1)) * p_enumerator((1,))
    names = {stanley_index_composition(b): "P" + b for b in ("001", "010", "011")}
    print("P11 * P1 =", {names.get(k, k): v for k, v in expand(lhs, "P").items()})


def main(nmax=4):
    for n in range(1, nmax + 1):
        show(n)
    structure_constants()


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4)
