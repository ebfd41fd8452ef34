"""Brute-force reference computations used as independent test oracles.

Nothing here calls the simplex code or the library's elimination routines.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product


def det(M):
    n = len(M)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return M[0][0]
    total = Fraction(0)
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * det(minor)
    return total


def cramer(A, b):
    """Unique solution of the square system, or None when singular."""
    d = det(A)
    if d == 0:
        return None
    n = len(A)
    out = []
    for j in range(n):
        Aj = [row[:j] + [b[i]] + row[j + 1:] for i, row in enumerate(A)]
        out.append(det(Aj) / d)
    return tuple(out)


def sign_compare(rows, u, v):
    for r in rows:
        s = sum(Fraction(a) * (Fraction(x) - Fraction(y)) for a, x, y in zip(r, u, v))
        if s:
            return 1 if s > 0 else -1
    return 0


def grid(dim, lo=-3, hi=3):
    return list(product(range(lo, hi + 1), repeat=dim))


def orders_agree_on_grid(rows1, rows2, dim, lo=-3, hi=3):
    """Compare-agreement of two row stacks on all differences from the grid."""
    zero = (0,) * dim
    return all(sign_compare(rows1, d, zero) == sign_compare(rows2, d, zero)
               for d in grid(dim, lo, hi))


def boxed_lp_max(objective, constraints, box):
    """Vertex enumeration for max c.x on {constraints, |x_j| <= box}.

    Returns the optimal value, or None when infeasible.
    """
    n = len(objective)
    rows = []
    for coeffs, rel, rhs in constraints:
        a = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        if rel in ("<=", "="):
            rows.append((a, rhs, rel == "="))
        if rel == ">=":
            rows.append(([-c for c in a], -rhs, False))
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        rows.append((e, Fraction(box), False))
        rows.append(([-c for c in e], Fraction(box), False))

    def feasible(x):
        for a, b, is_eq in rows:
            lhs = sum(p * q for p, q in zip(a, x))
            if lhs > b or (is_eq and lhs != b):
                return False
        return True

    best = None
    for sub in combinations(range(len(rows)), n):
        x = cramer([list(rows[i][0]) for i in sub], [rows[i][1] for i in sub])
        if x is None or not feasible(x):
            continue
        val = sum(Fraction(c) * xi for c, xi in zip(objective, x))
        if best is None or val > best:
            best = val
    return best


def hull_member_bruteforce(points, x):
    """Is x a nonnegative affine combination of an affinely independent subset?"""
    dim = len(x)
    x = [Fraction(a) for a in x]
    for k in range(1, min(len(points), dim + 1) + 1):
        for sub in combinations(range(len(points)), k):
            lam = _barycentric(points, sub, x)
            if lam is not None and all(l >= 0 for l in lam):
                return True
    return False


def _barycentric(points, sub, x):
    """Barycentric coordinates over an affinely independent subset, by Cramer.

    The lifted system has dim+1 equations and k unknowns; try every square
    k x k subsystem and check the full system.
    """
    dim = len(x)
    pts = [[Fraction(a) for a in points[i]] for i in sub]
    k = len(pts)
    eqs = [([p[j] for p in pts], x[j]) for j in range(dim)]
    eqs.append(([Fraction(1)] * k, Fraction(1)))
    for rows in combinations(range(len(eqs)), k):
        lam = cramer([list(eqs[r][0]) for r in rows], [eqs[r][1] for r in rows])
        if lam is None:
            continue
        if all(sum(a * l for a, l in zip(coeffs, lam)) == rhs for coeffs, rhs in eqs):
            return lam
        return None
    return None


def affinely_independent_bruteforce(points):
    if len(points) <= 1:
        return True
    base = points[0]
    diffs = [[Fraction(a) - Fraction(b) for a, b in zip(p, base)] for p in points[1:]]
    k = len(diffs)
    dim = len(base)
    if k > dim:
        return False
    # some k x k minor of the difference matrix is nonzero
    for cols in combinations(range(dim), k):
        if det([[d[c] for c in cols] for d in diffs]) != 0:
            return True
    return False


def semigroup_sums(generators, max_terms):
    """All distinct sums of between 1 and ``max_terms`` generators."""
    dim = len(generators[0])
    gens = [tuple(Fraction(a) for a in g) for g in generators]
    out = set()
    for k in range(1, max_terms + 1):
        for combo in combinations_with_replacement(range(len(gens)), k):
            out.add(tuple(sum(gens[i][j] for i in combo) for j in range(dim)))
    return out


def sorted_by_rows(vectors, rows):
    """Sort with a comparison function built from scratch on the row stack."""
    from functools import cmp_to_key
    dim = len(rows[0])
    zero = (0,) * dim
    return sorted(vectors, key=cmp_to_key(
        lambda a, b: sign_compare(rows, tuple(x - y for x, y in zip(a, b)), zero)))


def smallest_sums(generators, rows, n):
    """The n smallest sums of at most n generators, level by level.

    Each level adds one generator to the survivors of the previous level and
    keeps only the n smallest values seen so far. This is exact when every
    generator is positive: any prefix of a sum is smaller than the sum, so
    the prefixes of a top-n element are themselves top-n and are never cut.
    """
    dim = len(generators[0])
    gens = [tuple(Fraction(a) for a in g) for g in generators]
    keep = set()
    layer = {(Fraction(0),) * dim}
    for _ in range(n):
        layer = {tuple(a + b for a, b in zip(s, g)) for s in layer for g in gens}
        keep = set(sorted_by_rows(keep | layer, rows)[:n])
        layer &= keep
        if not layer:
            break
    return sorted_by_rows(keep, rows)[:n]
