"""Exact linear algebra over the rationals (dense, row-major)."""

from fractions import Fraction

from .rational import DimensionError, check_dim, vector


def matrix(rows, cols=None):
    """Normalize ``rows`` to a tuple of equal-length rational row tuples."""
    out = tuple(vector(r) for r in rows)
    if cols is None:
        cols = len(out[0]) if out else 0
    for i, r in enumerate(out):
        check_dim(r, cols, f"row {i}")
    return out


def rref(rows, cols=None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows and
    ``pivots[k]`` is the pivot column of ``R[k]``.
    """
    A = [list(r) for r in matrix(rows, cols)]
    ncols = len(A[0]) if A else (cols or 0)
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [a * inv for a in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return [tuple(row) for row in A[:r]], pivots


def rank(rows, cols=None):
    return len(rref(rows, cols)[1])


def kernel_basis(rows, cols=None):
    """Basis of ``{v : M v = 0}``, one vector per free column.

    ``cols`` must be given when ``rows`` is empty.
    """
    rows = matrix(rows, cols)
    n = len(rows[0]) if rows else cols
    if n is None:
        raise ValueError("number of columns is required for an empty matrix")
    R, pivots = rref(rows, n)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[free]
        basis.append(tuple(v))
    return basis


def solve(rows, rhs):
    """One solution of ``M x = rhs``, or None if the system is inconsistent."""
    rows = matrix(rows)
    rhs = vector(rhs)
    if len(rhs) != len(rows):
        raise DimensionError("right-hand side length differs from row count")
    n = len(rows[0]) if rows else 0
    aug = [r + (b,) for r, b in zip(rows, rhs)]
    R, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(R, pivots):
        x[p] = row[n]
    return tuple(x)


def affinely_independent(points):
    if not points:
        return True
    base = points[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]
    return not diffs or rank(diffs, len(base)) == len(diffs)


def solve_affine(points, x):
    """Barycentric coordinates of ``x`` over affinely independent ``points``.

    Returns the unique ``lam`` with ``sum(lam) == 1`` and
    ``sum(lam_i * p_i) == x``; None if the points are affinely dependent or
    ``x`` is outside their affine span.
    """
    if not points:
        raise ValueError("need at least one point")
    x = vector(x)
    points = [vector(p) for p in points]
    for i, p in enumerate(points):
        check_dim(p, len(x), f"point {i}")
    if not affinely_independent(points):
        return None
    # columns are the points lifted by a trailing 1
    k = len(points)
    rows = [tuple(p[j] for p in points) for j in range(len(x))]
    rows.append((Fraction(1),) * k)
    lam = solve(rows, x + (Fraction(1),))
    return lam


def extend_to_basis(rows, dim):
    """Append standard unit vectors (lowest index first) until rank == dim."""
    out = list(matrix(rows, dim))
    r = rank(out, dim) if out else 0
    for i in range(dim):
        if r == dim:
            break
        e = tuple(Fraction(int(j == i)) for j in range(dim))
        if rank(out + [e], dim) > r:
            out.append(e)
            r += 1
    return tuple(out)
