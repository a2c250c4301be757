"""Integer row/column reduction for sublattices of Z^N."""
from __future__ import annotations


def _xgcd(a: int, b: int) -> tuple:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hermite_rows(rows: list, ncols: int) -> tuple:
    """Row-style Hermite normal form of the Z-span of ``rows``.

    Returns ``(basis, pivots)``: independent rows in echelon form with
    positive pivots and entries above each pivot reduced into [0, pivot).
    """
    work = [list(r) for r in rows if any(r)]
    basis, pivots = [], []
    col = 0
    while work and col < ncols:
        nz = [r for r in work if r[col]]
        if not nz:
            col += 1
            continue
        rest = [r for r in work if not r[col]]
        # gcd-combine all rows with a nonzero entry in this column
        piv = nz[0]
        others = []
        for r in nz[1:]:
            g, x, y = _xgcd(piv[col], r[col])
            a, b = piv[col] // g, r[col] // g
            new_piv = [x * p + y * q for p, q in zip(piv, r)]
            new_r = [-b * p + a * q for p, q in zip(piv, r)]
            piv = new_piv
            if any(new_r):
                others.append(new_r)
        if piv[col] < 0:
            piv = [-v for v in piv]
        basis.append(piv)
        pivots.append(col)
        work = rest + [r for r in others if any(r)]
        col += 1
    # reduce above pivots
    for i in range(len(basis)):
        c, p = pivots[i], basis[i][pivots[i]]
        for j in range(i):
            q = basis[j][c] // p
            if q:
                basis[j] = [u - q * v for u, v in zip(basis[j], basis[i])]
    return basis, pivots


def reduce_vector(v: list, basis: list, pivots: list) -> list:
    """Subtract multiples of echelon rows so pivot entries land in [0, pivot)."""
    v = list(v)
    for row, c in zip(basis, pivots):
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return v


def lattice_index(rows: list, ncols: int) -> int:
    """Index of the span of ``rows`` in Z^ncols (0 if not full rank)."""
    basis, pivots = hermite_rows(rows, ncols)
    if len(basis) < ncols:
        return 0
    out = 1
    for row, c in zip(basis, pivots):
        out *= row[c]
    return out


def complement_projection(rows: list, ncols: int) -> tuple:
    """Integer matrix P (ncols x r) whose kernel is exactly span(rows).

    The map v -> v P is onto Z^r.  Raises ValueError if Z^ncols / span(rows)
    has torsion (the span is not saturated).  Also returns the pivot columns
    when every Hermite pivot is 1, in which case the free coordinates are the
    non-pivot columns.
    """
    basis, pivots = hermite_rows(rows, ncols)
    if all(row[c] == 1 for row, c in zip(basis, pivots)):
        free = [c for c in range(ncols) if c not in set(pivots)]
        proj = []
        for j in range(ncols):
            e = [0] * ncols
            e[j] = 1
            red = reduce_vector(e, basis, pivots)
            proj.append([red[c] for c in free])
        return proj, tuple(pivots)
    # general case: column-reduce the basis to [H | 0] tracking V
    d = len(basis)
    A = [list(r) for r in basis]
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def colop(i: int, j: int, a: int, b: int, c: int, e: int) -> None:
        # (col_i, col_j) <- (a col_i + b col_j, c col_i + e col_j)
        for M in (A, V):
            for row in M:
                x, y = row[i], row[j]
                row[i], row[j] = a * x + b * y, c * x + e * y

    for i in range(d):
        for j in range(i + 1, ncols):
            if A[i][j]:
                if not A[i][i]:
                    colop(i, j, 0, 1, 1, 0)
                    continue
                g, x, y = _xgcd(A[i][i], A[i][j])
                a, b = A[i][i] // g, A[i][j] // g
                colop(i, j, x, y, -b, a)
        if abs(A[i][i]) != 1:
            raise ValueError("quotient lattice has torsion")
    proj = [row[d:] for row in V]
    return proj, None
