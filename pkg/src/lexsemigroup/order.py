"""Lexicographic orders on Q^n defined by a stack of linear functionals.

``MatrixOrder(dim, rows)`` compares ``u`` and ``v`` by the sign of the first
row that does not vanish on ``u - v``. Rank-deficient stacks are allowed and
give total preorders.
"""

import enum
from dataclasses import dataclass

from . import linalg
from .rational import DimensionError, add, check_dim, dot, sub, unit, vector


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self):
        return self.name.lower()


LESS, EQUAL, GREATER = Ordering.LESS, Ordering.EQUAL, Ordering.GREATER


@dataclass(frozen=True)
class MatrixOrder:
    dim: int
    rows: tuple

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError("dim must be a positive integer")
        rows = tuple(vector(r) for r in self.rows)
        if not rows:
            raise ValueError("a matrix order needs at least one row")
        for i, r in enumerate(rows):
            check_dim(r, self.dim, f"row {i}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, dim):
        return cls(dim, [unit(dim, i) for i in range(dim)])

    def key(self, v):
        """Tuple of functional values; lexicographic tuple order matches compare."""
        check_dim(v, self.dim)
        return tuple(dot(r, v) for r in self.rows)

    def sign(self, d):
        for r in self.rows:
            s = dot(r, d)
            if s:
                return GREATER if s > 0 else LESS
        return EQUAL


@dataclass(frozen=True)
class FormalDifference:
    """The Grothendieck-group element ``plus - minus``."""

    plus: tuple
    minus: tuple

    def __post_init__(self):
        object.__setattr__(self, "plus", vector(self.plus))
        object.__setattr__(self, "minus", vector(self.minus))
        check_dim(self.minus, len(self.plus), "minus")

    @property
    def value(self):
        return sub(self.plus, self.minus)


@dataclass(frozen=True)
class FlagDescription:
    subspaces: tuple  # ((dim, basis), ...) from L_0 down
    orientations: tuple

    @property
    def dims(self):
        return tuple(d for d, _ in self.subspaces)


def compare(order, u, v):
    u, v = vector(u), vector(v)
    check_dim(u, order.dim, "u")
    check_dim(v, order.dim, "v")
    return order.sign(sub(u, v))


def is_total_on_space(order):
    return linalg.rank(order.rows, order.dim) == order.dim


def canonicalize(order):
    """Canonical representative under order-preserving row operations.

    Only positive row scaling, adding multiples of earlier rows to later
    rows, and dropping rows that become zero are used.
    """
    kept = []  # (row, pivot column)
    for row in order.rows:
        row = list(row)
        for prev, p in kept:
            if row[p]:
                f = row[p] / prev[p]
                row = [a - f * b for a, b in zip(row, prev)]
        lead = next((j for j, a in enumerate(row) if a), None)
        if lead is None:
            continue
        s = 1 / abs(row[lead])
        kept.append((tuple(a * s for a in row), lead))
    return MatrixOrder(order.dim, [r for r, _ in kept])


def orders_equal(first, second):
    if first.dim != second.dim:
        raise DimensionError(f"orders live in dimensions {first.dim} and {second.dim}")
    return canonicalize(first).rows == canonicalize(second).rows


def flag_of(order):
    canon = canonicalize(order)
    n = order.dim
    subspaces = [(n, tuple(unit(n, i) for i in range(n)))]
    for k in range(1, len(canon.rows) + 1):
        basis = tuple(linalg.kernel_basis(canon.rows[:k], n))
        subspaces.append((len(basis), basis))
    return FlagDescription(tuple(subspaces), canon.rows)


def group_extend_compare(order, a1, a2):
    """Compare formal differences without forming them in the group."""
    for name, v in (("a1.plus", a1.plus), ("a1.minus", a1.minus),
                    ("a2.plus", a2.plus), ("a2.minus", a2.minus)):
        check_dim(v, order.dim, name)
    return compare(order, add(a1.plus, a2.minus), add(a2.plus, a1.minus))


def is_positive(order, v):
    return order.sign(vector(v)) is GREATER
