"""Convex hulls of finite rational point sets.

Membership with convex-combination certificates, Carathéodory reduction,
natural-number relations through the origin, and lexicographic separation.
Outputs are certificates: they are not unique, but each one can be checked
exactly with its ``verify`` method.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import linalg
from .lp import EQ, GE, LE, Optimal, find_feasible, maximize
from .order import GREATER, MatrixOrder, canonicalize, is_total_on_space
from .rational import (check_dim, dot, is_zero, linear_combination,
                       primitive_integer_vector, sub, vector, zeros)


@dataclass(frozen=True)
class PointSet:
    dim: int
    points: tuple

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError("dim must be a positive integer")
        pts = tuple(vector(p) for p in self.points)
        if not pts:
            raise ValueError("a point set needs at least one point")
        for i, p in enumerate(pts):
            check_dim(p, self.dim, f"point {i}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, points):
        points = [vector(p) for p in points]
        return cls(len(points[0]) if points else 0, points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]


def _as_pointset(A):
    return A if isinstance(A, PointSet) else PointSet.of(A)


@dataclass(frozen=True)
class HullMembership:
    """Result of :func:`point_in_hull`.

    When ``inside`` is true, ``coeffs`` is a convex combination of the points
    equal to the query. Otherwise ``functional`` strictly separates:
    ``f.x < threshold < f.a`` for every point ``a``.
    """

    inside: bool
    coeffs: tuple = None
    functional: tuple = None
    threshold: Fraction = None

    def __bool__(self):
        return self.inside

    def verify(self, A, x):
        A = _as_pointset(A)
        x = vector(x)
        if self.inside:
            return (len(self.coeffs) == len(A)
                    and all(c >= 0 for c in self.coeffs)
                    and sum(self.coeffs) == 1
                    and linear_combination(self.coeffs, A.points, A.dim) == x)
        f, t = self.functional, self.threshold
        return dot(f, x) < t and all(dot(f, a) > t for a in A.points)


@dataclass(frozen=True)
class CaratheodoryCertificate:
    indices: tuple
    coords: tuple

    def point(self, A):
        A = _as_pointset(A)
        return linear_combination(self.coords, [A[i] for i in self.indices], A.dim)

    def verify(self, A, x):
        A = _as_pointset(A)
        idx = self.indices
        if len(idx) != len(self.coords) or len(set(idx)) != len(idx):
            return False
        if not idx or len(idx) > A.dim + 1:
            return False
        if not all(0 <= i < len(A) for i in idx):
            return False
        if any(c <= 0 for c in self.coords) or sum(self.coords) != 1:
            return False
        return (linalg.affinely_independent([A[i] for i in idx])
                and self.point(A) == vector(x))


@dataclass(frozen=True)
class NaturalWitness:
    """Nonnegative integers ``q`` with ``sum(q_i * a_i) == 0``.

    ``zero_generator`` marks the degenerate witness that only records a zero
    point in the input; a genuine witness puts weight on a nonzero point.
    """

    coeffs: tuple
    zero_generator: bool = False

    def verify(self, A):
        A = _as_pointset(A)
        q = self.coeffs
        if len(q) != len(A):
            return False
        if not all(isinstance(c, int) and c >= 0 for c in q):
            return False
        if linear_combination(q, A.points, A.dim) != zeros(A.dim):
            return False
        genuine = any(c > 0 and not is_zero(a) for c, a in zip(q, A.points))
        if self.zero_generator:
            return any(c > 0 for c in q)
        return genuine


@dataclass(frozen=True)
class SeparationResult:
    """A total order placing every point strictly above ``vertex``."""

    order: MatrixOrder
    vertex: tuple

    def verify(self, A):
        A = _as_pointset(A)
        if self.order.dim != A.dim or not is_total_on_space(self.order):
            return False
        return all(self.order.sign(sub(p, self.vertex)) is GREATER for p in A.points)


class MembershipError(ValueError):
    """The point to separate lies in the hull; ``certificate`` proves it."""

    def __init__(self, certificate):
        super().__init__("point lies in the convex hull")
        self.certificate = certificate


def _hull_coefficients(A, x):
    k = len(A)
    cons = [(tuple(Fraction(int(i == j)) for j in range(k)), GE, 0) for i in range(k)]
    cons.append(((Fraction(1),) * k, EQ, 1))
    for c in range(A.dim):
        cons.append((tuple(p[c] for p in A.points), EQ, x[c]))
    return find_feasible(k, cons)


def _max_margin_functional(A, x):
    """Functional maximizing ``min f.(a - x)`` over the box ``|f_j| <= 1``."""
    n = A.dim
    cons = []
    for a in A.points:
        d = sub(a, x)
        cons.append((d + (Fraction(-1),), GE, 0))
    for j in range(n):
        e = tuple(Fraction(int(i == j)) for i in range(n + 1))
        cons.append((e, LE, 1))
        cons.append((e, GE, -1))
    res = maximize((Fraction(0),) * n + (Fraction(1),), cons)
    assert isinstance(res, Optimal)
    return res.point[:n], res.value


def point_in_hull(A, x):
    A = _as_pointset(A)
    x = vector(x)
    check_dim(x, A.dim, "x")
    lam = _hull_coefficients(A, x)
    if lam is not None:
        return HullMembership(True, coeffs=lam)
    f, margin = _max_margin_functional(A, x)
    assert margin > 0
    f = primitive_integer_vector(f)
    fx = dot(f, x)
    lo = min(dot(f, a) for a in A.points)
    return HullMembership(False, functional=f, threshold=(fx + lo) / 2)


def _reduce_support(A, support, lam):
    """Walk to a face until the support is affinely independent."""
    while True:
        pts = [A[i] for i in support]
        # affine dependences: columns are points lifted by 1
        lifted = [tuple(p[j] for p in pts) for j in range(A.dim)]
        lifted.append((Fraction(1),) * len(pts))
        dep = linalg.kernel_basis(lifted, len(pts))
        if not dep:
            return support, lam
        mu = dep[0]
        if not any(m > 0 for m in mu):
            mu = tuple(-m for m in mu)
        t = min(l / m for l, m in zip(lam, mu) if m > 0)
        lam = [l - t * m for l, m in zip(lam, mu)]
        keep = [k for k, l in enumerate(lam) if l != 0]
        support = [support[k] for k in keep]
        lam = [lam[k] for k in keep]


def caratheodory(A, x):
    """Affinely independent certificate for ``x`` in the hull, or None."""
    A = _as_pointset(A)
    x = vector(x)
    check_dim(x, A.dim, "x")
    lam = _hull_coefficients(A, x)
    if lam is None:
        return None
    support = [i for i, l in enumerate(lam) if l > 0]
    support, coords = _reduce_support(A, support, [lam[i] for i in support])
    return CaratheodoryCertificate(tuple(support), tuple(coords))


def natural_combination_witness(A):
    """Natural numbers ``q`` with ``sum(q_i a_i) = 0``, or None.

    None exactly when the origin is outside the convex hull of ``A``.
    """
    A = _as_pointset(A)
    nonzero = [i for i, a in enumerate(A.points) if not is_zero(a)]
    if nonzero:
        cert = caratheodory(PointSet(A.dim, [A[i] for i in nonzero]), zeros(A.dim))
        if cert is not None:
            d = lcm(*(c.denominator for c in cert.coords))
            q = [0] * len(A)
            for k, c in zip(cert.indices, cert.coords):
                q[nonzero[k]] = int(c * d)
            return NaturalWitness(tuple(q))
    if len(nonzero) < len(A):
        first_zero = next(i for i, a in enumerate(A.points) if is_zero(a))
        return NaturalWitness(tuple(int(i == first_zero) for i in range(len(A))),
                              zero_generator=True)
    return None


def separate_from_hull(A, a):
    """Total order under which every point of ``A`` is strictly above ``a``.

    Raises MembershipError (with a Carathéodory certificate) if ``a`` lies in
    the hull.
    """
    A = _as_pointset(A)
    a = vector(a)
    check_dim(a, A.dim, "a")
    member = point_in_hull(A, a)
    if member.inside:
        raise MembershipError(caratheodory(A, a))
    rows = linalg.extend_to_basis([member.functional], A.dim)
    return SeparationResult(MatrixOrder(A.dim, rows), a)


def positive_lex_order(G):
    """Total order making every nonzero point of ``G`` positive.

    Returns a :class:`MatrixOrder`, or a :class:`NaturalWitness` showing that
    the origin lies in the hull of the nonzero points, in which case no such
    order exists. Zero points are ignored.
    """
    G = _as_pointset(G)
    n = G.dim
    remaining = [i for i, g in enumerate(G.points) if not is_zero(g)]
    rows = []
    box = []
    for j in range(n):
        e = tuple(Fraction(int(i == j)) for i in range(n))
        box += [(e, LE, 1), (e, GE, -1)]
    while remaining:
        cons = [(G[i], GE, 0) for i in remaining] + box
        total = tuple(sum((G[i][j] for i in remaining), Fraction(0)) for j in range(n))
        res = maximize(total, cons)
        assert isinstance(res, Optimal)
        if res.value == 0:
            # every admissible functional vanishes on the remaining points:
            # their cone is a linear subspace, so it holds the origin
            sub_witness = natural_combination_witness([G[i] for i in remaining])
            q = [0] * len(G)
            for i, c in zip(remaining, sub_witness.coeffs):
                q[i] = c
            return NaturalWitness(tuple(q))
        f = primitive_integer_vector(res.point)
        rows.append(f)
        remaining = [i for i in remaining if dot(f, G[i]) == 0]
    return canonicalize(MatrixOrder(n, linalg.extend_to_basis(rows, n)))
