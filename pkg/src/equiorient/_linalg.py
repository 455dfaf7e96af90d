"""Exact integer and F2 linear algebra on small dense matrices.

Matrices are lists of row lists with Python ints (arbitrary precision), so
nothing here ever rounds.  Sizes stay in the dozens for every supported
computation; clarity beats asymptotics.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def copy(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(row) for row in A]


def mat_mult(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    out = zeros(rows, cols)
    for i in range(rows):
        Ai = A[i]
        Oi = out[i]
        for k in range(inner):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(cols):
                    Oi[j] += a * Bk[j]
    return out


def mat_add(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A: Sequence[Sequence[int]], c: int) -> Matrix:
    return [[c * a for a in row] for row in A]


def mat_vec(A: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def is_zero(A: Sequence[Sequence[int]]) -> bool:
    return all(all(x == 0 for x in row) for row in A)


def smith_normal_form(
    A: Sequence[Sequence[int]],
) -> Tuple[Matrix, Matrix, Matrix]:
    """U, D, V with U*A*V = D diagonal, U and V unimodular, d1 | d2 | ...

    Classic pivot-and-reduce elimination; entries are exact ints throughout.
    """
    D = copy(A)
    rows = len(D)
    cols = len(D[0]) if rows else 0
    U = identity(rows)
    V = identity(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, c):
        D[dst] = [a + c * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def addmul_col(dst, src, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(rows, cols):
        # Pick the nonzero entry of least absolute value as pivot.
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(D[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        swap_rows(t, pi)
        swap_cols(t, pj)
        if D[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, rows):
            if D[i][t]:
                q = D[i][t] // D[t][t]
                addmul_row(i, t, -q)
                if D[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if D[t][j]:
                q = D[t][j] // D[t][t]
                addmul_col(j, t, -q)
                if D[t][j]:
                    dirty = True
        if dirty:
            continue
        # Pivot must divide the rest of the block for the divisor chain.
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if D[i][j] % D[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            addmul_row(t, offender, 1)
            continue
        t += 1
    return U, D, V


def diagonal_of(D: Sequence[Sequence[int]]) -> List[int]:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def rank(A: Sequence[Sequence[int]]) -> int:
    _, D, _ = smith_normal_form(A)
    return sum(1 for d in diagonal_of(D) if d)


def solve_integer(
    A: Sequence[Sequence[int]], b: Sequence[int]
) -> Optional[List[int]]:
    """One integer solution x of A x = b, or None if none exists."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if rows == 0:
        return [0] * cols
    U, D, V = smith_normal_form(A)
    c = mat_vec(U, list(b))
    y = [0] * cols
    diag = diagonal_of(D)
    for i in range(rows):
        d = diag[i] if i < len(diag) else 0
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return mat_vec(V, y)


def column_lattice_basis(A: Sequence[Sequence[int]]) -> Matrix:
    """Basis (as columns) of the lattice spanned by the columns of A."""
    rows = len(A)
    if rows == 0:
        return []
    U, D, _ = smith_normal_form(A)
    Uinv = invert_unimodular(U)
    basis_cols = []
    for i, d in enumerate(diagonal_of(D)):
        if d:
            basis_cols.append([d * Uinv[r][i] for r in range(rows)])
    return transpose(basis_cols) if basis_cols else [[] for _ in range(rows)]


def invert_unimodular(A: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse of a unimodular integer matrix (via its Smith form)."""
    n = len(A)
    U, D, V = smith_normal_form(A)
    diag = diagonal_of(D)
    assert len(diag) == n and all(d == 1 for d in diag), "matrix is not unimodular"
    # U A V = I, so A^-1 = V U.
    return mat_mult(V, U)


def integer_kernel(A: Sequence[Sequence[int]]) -> Matrix:
    """Basis of the integer kernel of A, returned as columns."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return identity(cols)
    _, D, V = smith_normal_form(A)
    diag = diagonal_of(D)
    kernel_cols = [
        [V[r][j] for r in range(cols)]
        for j in range(cols)
        if j >= len(diag) or diag[j] == 0
    ]
    return transpose(kernel_cols) if kernel_cols else [[] for _ in range(cols)]


def quotient_presentation(
    gens: Sequence[Sequence[int]], sub: Sequence[Sequence[int]]
) -> Tuple[int, List[int]]:
    """Presentation (free rank, invariant factors > 1) of span(gens)/span(sub).

    Both arguments hold generators as columns inside the same ambient Z^k;
    span(sub) must be contained in span(gens).
    """
    basis = column_lattice_basis(gens)
    r = len(basis[0]) if basis and basis[0] else 0
    if r == 0:
        return 0, []
    sub_cols = transpose(sub) if sub and sub[0] else []
    coords = []
    for col in sub_cols:
        x = solve_integer(basis, col)
        assert x is not None, "subgroup generator escapes the ambient lattice"
        coords.append(x)
    if not coords:
        return r, []
    coord_matrix = transpose(coords)
    _, D, _ = smith_normal_form(coord_matrix)
    diag = [d for d in diagonal_of(D) if d]
    free_rank = r - len(diag)
    torsion = [d for d in diag if d > 1]
    return free_rank, torsion


def f2_rank(A: Sequence[Sequence[int]]) -> int:
    rows = [[x & 1 for x in row] for row in A]
    cols = len(A[0]) if A else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def f2_solve(
    A: Sequence[Sequence[int]], b: Sequence[int]
) -> Optional[List[int]]:
    """Solve A x = b over F2; entries are read mod 2."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    aug = [[A[i][j] & 1 for j in range(cols)] + [b[i] & 1] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(rows):
            if i != r and aug[i][c]:
                aug[i] = [x ^ y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, rows):
        if aug[i][cols]:
            return None
    x = [0] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return x
