"""Change-of-basis matrices between the R, Q, Stanley P and fundamental bases.

Columns and rows are indexed by 0/1 strings sigma (lex order) for R and Q,
and by compositions (lex order) for L.  Every matrix entry is an integer.
"""
from __future__ import annotations

from fractions import Fraction

from .posets import enumerator, q_sigma, r_sigma, sigma_strings, stanley_p_alpha
from .qsym import FUNDAMENTAL, QSymFn, compositions_of


def r_enumerator(sigma: str) -> QSymFn:
    """Naturally labelled R_sigma enumerator (labels already increase upward)."""
    return enumerator(r_sigma(sigma))


def q_enumerator(sigma: str) -> QSymFn:
    return enumerator(q_sigma(sigma))


def p_enumerator(alpha) -> QSymFn:
    return enumerator(stanley_p_alpha(alpha))


def _columns(n: int, family: str) -> tuple:
    if family == "R":
        keys = sigma_strings(n)
        funcs = [r_enumerator(s) for s in keys]
    elif family == "Q":
        keys = sigma_strings(n)
        funcs = [q_enumerator(s) for s in keys]
    elif family == "P":
        keys = compositions_of(n)
        funcs = [p_enumerator(a) for a in keys]
    else:
        raise ValueError(f"unknown family {family!r}")
    return keys, [f.vector(n, FUNDAMENTAL) for f in funcs]


def in_L(n: int, family: str) -> list:
    """Matrix whose column j is the L-expansion of the j-th family member."""
    _, cols = _columns(n, family)
    N = len(cols)
    return [[cols[j][i] for j in range(N)] for i in range(N)]


def solve_integer(A: list, b: list) -> list:
    """Exact solution of A x = b; raises if singular or non-integral."""
    N = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for col in range(N):
        piv = next((r for r in range(col, N) if M[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for r in range(N):
            if r != col and M[r][col] != 0:
                m = M[r][col]
                M[r] = [a - m * c for a, c in zip(M[r], M[col])]
    out = []
    for r in range(N):
        x = M[r][N]
        if x.denominator != 1:
            raise ArithmeticError(f"non-integral coordinate {x}")
        out.append(int(x))
    return out


def matmul(A: list, B: list) -> list:
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def expand(f: QSymFn, family: str) -> dict:
    """Coordinates of a homogeneous f in the R, Q or P basis of its degree."""
    n = f.degree
    if not n:
        raise ValueError("need a homogeneous function of positive degree")
    keys, _ = _columns(n, family)
    coords = solve_integer(in_L(n, family), f.vector(n, FUNDAMENTAL))
    return {k: c for k, c in zip(keys, coords) if c}


def lu_matrices(n: int) -> dict:
    """A_n (R in L), L_n (Q in L) and U_n (R in Q)."""
    A = in_L(n, "R")
    L = in_L(n, "Q")
    keys = sigma_strings(n)
    N = len(keys)
    U_cols = [solve_integer(L, [A[i][j] for i in range(N)]) for j in range(N)]
    U = [[U_cols[j][i] for j in range(N)] for i in range(N)]
    return {"sigmas": keys, "compositions": compositions_of(n), "A": A, "L": L, "U": U}


def is_upper_unitriangular(M: list) -> bool:
    N = len(M)
    return all(M[i][i] == 1 for i in range(N)) and all(
        M[i][j] == 0 for i in range(N) for j in range(i)
    )


def is_lower_unitriangular(M: list) -> bool:
    return is_upper_unitriangular([list(r) for r in zip(*M)])


def format_matrix(M: list, row_labels, col_labels) -> str:
    rl = [str(r) for r in row_labels]
    cl = [str(c) for c in col_labels]
    w = max([len(x) for x in rl] + [1])
    cw = max([len(x) for x in cl] + [len(str(v)) for row in M for v in row])
    lines = [" " * w + " " + " ".join(c.rjust(cw) for c in cl)]
    for lab, row in zip(rl, M):
        lines.append(lab.ljust(w) + " " + " ".join(str(v).rjust(cw) for v in row))
    return "\n".join(lines)


def comp_label(alpha) -> str:
    return "L" + "".join(map(str, alpha)) if max(alpha) < 10 else "L" + ",".join(map(str, alpha))
