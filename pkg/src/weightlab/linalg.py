"""Exact linear algebra over the rationals.

Everything here works on lists of lists of ``Fraction`` (or ints, which
are promoted on the fly).  Sizes are tiny throughout the package, so the
classic textbook algorithms are used unmodified.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def _frac_rows(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = _frac_rows(rows)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def solve(a_rows, b) -> Vector | None:
    """Solve A x = b exactly; None if inconsistent.

    When the solution space has positive dimension, free variables are
    set to zero (callers that need uniqueness pass full-column-rank A).
    """
    if not a_rows:
        return [] if all(Fraction(x) == 0 for x in b) else None
    ncols = len(a_rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a_rows, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    sol = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        sol[c] = red[r][ncols]
    return sol


def inverse(a_rows) -> Matrix:
    """Exact inverse of a square nonsingular matrix."""
    n = len(a_rows)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(a_rows)
    ]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def mat_vec(a_rows, v) -> Vector:
    return [sum((Fraction(x) * Fraction(y) for x, y in zip(row, v)), Fraction(0)) for row in a_rows]


def in_cone(generators: list[tuple], target: tuple) -> Vector | None:
    """Nonnegative rational coefficients c with sum c_i g_i = target, or None.

    Phase-one simplex with Bland's rule; exact over Fraction, so
    termination and correctness are unconditional.
    """
    dim = len(target)
    ngen = len(generators)
    b = [Fraction(t) for t in target]
    cols = [[Fraction(g[i]) for i in range(dim)] for g in generators]
    # Flip rows so the artificial basis is feasible (b >= 0).
    for i in range(dim):
        if b[i] < 0:
            b[i] = -b[i]
            for col in cols:
                col[i] = -col[i]
    if ngen == 0:
        return [] if all(x == 0 for x in b) else None

    total = ngen + dim  # generator columns then artificial columns
    tableau = [
        [cols[j][i] for j in range(ngen)]
        + [Fraction(int(i == k)) for k in range(dim)]
        + [b[i]]
        for i in range(dim)
    ]
    basis = list(range(ngen, total))
    # Reduced-cost row for "minimize the sum of artificials": artificial
    # columns start basic with reduced cost 0; the last entry holds the
    # negated objective value.
    cost = [Fraction(0)] * (total + 1)
    for j in range(ngen):
        cost[j] = -sum(tableau[i][j] for i in range(dim))
    cost[-1] = -sum(row[-1] for row in tableau)

    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        best_i, best_ratio = None, None
        for i in range(dim):
            if tableau[i][enter] > 0:
                ratio = tableau[i][-1] / tableau[i][enter]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[best_i])
                ):
                    best_i, best_ratio = i, ratio
        if best_i is None:
            break  # unbounded column; cannot happen with artificials present
        piv = tableau[best_i][enter]
        tableau[best_i] = [x / piv for x in tableau[best_i]]
        for i in range(dim):
            if i != best_i and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [a - f * c for a, c in zip(tableau[i], tableau[best_i])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [a - f * c for a, c in zip(cost, tableau[best_i])]
        basis[best_i] = enter

    if cost[-1] != 0:  # optimum of the artificial objective is positive
        return None
    sol = [Fraction(0)] * ngen
    for i, var in enumerate(basis):
        if var < ngen:
            sol[var] = tableau[i][-1]
        elif tableau[i][-1] != 0:
            return None  # artificial stuck at positive level
    return sol
