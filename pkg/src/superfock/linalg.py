"""Dense exact linear algebra over the cyclotomic field.

Small systems only (a few hundred rows); plain Gaussian elimination with
exact division.  Used for root-space computation and for inverting the
quadratic-element identification map.
"""

from __future__ import annotations

from .cyclo import Cyclotomic, ONE, ZERO


def rref(rows: list[list[Cyclotomic]]) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form.

    Returns the list of pivot column indices.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def nullspace(rows: list[list[Cyclotomic]], ncols: int) -> list[list[Cyclotomic]]:
    """Basis of the right nullspace of the given matrix."""
    work = [list(row) for row in rows]
    pivots = rref(work)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][fc]
        basis.append(vec)
    return basis


def invert(matrix: list[list[Cyclotomic]]) -> list[list[Cyclotomic]]:
    """Exact inverse of a square matrix; raises ValueError if singular."""
    n = len(matrix)
    work = [list(row) + [ONE if i == j else ZERO for j in range(n)]
            for i, row in enumerate(matrix)]
    pivots = rref(work)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in work]


def solve(matrix: list[list[Cyclotomic]], rhs: list[Cyclotomic]) -> list[Cyclotomic]:
    """Solve A x = b for square invertible A."""
    inv = invert(matrix)
    return [sum((row[j] * rhs[j] for j in range(len(rhs))), ZERO) for row in inv]
