"""Exact two-phase simplex over the rationals.

Variables are free (unrestricted in sign). Pivoting follows Bland's rule, so
the method terminates on degenerate problems as well.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .rational import DimensionError, dot, vector, zeros

LE, EQ, GE = "<=", "=", ">="
_RELATIONS = (LE, EQ, GE)


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    relation: str
    rhs: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeffs", vector(self.coeffs))
        object.__setattr__(self, "rhs", vector([self.rhs])[0])
        if self.relation not in _RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")

    def holds(self, x):
        lhs = dot(self.coeffs, x)
        if self.relation == LE:
            return lhs <= self.rhs
        if self.relation == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LPProblem:
    """Maximize ``objective . x`` subject to ``constraints``."""

    objective: tuple
    constraints: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "objective", vector(self.objective))
        cons = tuple(c if isinstance(c, Constraint) else Constraint(*c)
                     for c in self.constraints)
        n = len(self.objective)
        for i, c in enumerate(cons):
            if len(c.coeffs) != n:
                raise DimensionError(
                    f"constraint {i} has {len(c.coeffs)} coefficients, expected {n}")
        object.__setattr__(self, "constraints", cons)

    @property
    def dim(self):
        return len(self.objective)

    def feasible(self, x):
        return all(c.holds(x) for c in self.constraints)


@dataclass(frozen=True)
class Optimal:
    point: tuple
    value: Fraction


@dataclass(frozen=True)
class Infeasible:
    pass


@dataclass(frozen=True)
class Unbounded:
    feasible_point: tuple
    ray: tuple


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.T = [list(r) + [b] for r, b in zip(rows, rhs)]
        self.basis = list(basis)

    @property
    def ncols(self):
        return len(self.T[0]) - 1 if self.T else 0

    def pivot(self, r, c):
        row = self.T[r]
        inv = 1 / row[c]
        row = [a * inv for a in row]
        self.T[r] = row
        for i, other in enumerate(self.T):
            if i != r and other[c] != 0:
                f = other[c]
                self.T[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = c

    def reduced_costs(self, cost, columns):
        rc = {}
        for j in columns:
            v = cost[j]
            for i, b in enumerate(self.basis):
                if cost[b] and self.T[i][j]:
                    v -= cost[b] * self.T[i][j]
            rc[j] = v
        return rc

    def run(self, cost, columns):
        """Maximize ``cost``; returns None at optimum or the unbounded column."""
        columns = sorted(columns)
        while True:
            rc = self.reduced_costs(cost, columns)
            entering = next((j for j in columns if rc[j] > 0), None)
            if entering is None:
                return None
            best = None
            for i, row in enumerate(self.T):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return entering
            self.pivot(best[1], entering)

    def values(self, ncols):
        z = [Fraction(0)] * ncols
        for i, b in enumerate(self.basis):
            z[b] = self.T[i][-1]
        return z


def lp_solve(problem):
    """Solve ``problem`` exactly; returns Optimal, Infeasible or Unbounded."""
    if not isinstance(problem, LPProblem):
        problem = LPProblem(*problem)
    n = problem.dim
    cons = problem.constraints
    m = len(cons)
    n_slack = sum(c.relation != EQ for c in cons)
    # columns: x+ (n), x- (n), slacks, artificials (m)
    n_struct = 2 * n + n_slack
    width = n_struct + m
    rows, rhs = [], []
    s = 2 * n
    for i, c in enumerate(cons):
        row = [Fraction(0)] * width
        for j, a in enumerate(c.coeffs):
            row[j] = a
            row[n + j] = -a
        if c.relation != EQ:
            row[s] = Fraction(1) if c.relation == LE else Fraction(-1)
            s += 1
        b = c.rhs
        if b < 0:
            row = [-a for a in row]
            b = -b
        row[n_struct + i] = Fraction(1)
        rows.append(row)
        rhs.append(b)
    tab = _Tableau(rows, rhs, range(n_struct, width))

    phase1 = [Fraction(0)] * n_struct + [Fraction(-1)] * m
    tab.run(phase1, range(width))
    if any(tab.T[i][-1] != 0 for i, b in enumerate(tab.basis) if b >= n_struct):
        return Infeasible()

    # drive zero-level artificials out of the basis; drop redundant rows
    i = 0
    while i < len(tab.T):
        if tab.basis[i] >= n_struct:
            j = next((j for j in range(n_struct) if tab.T[i][j] != 0), None)
            if j is None:
                del tab.T[i]
                del tab.basis[i]
                continue
            tab.pivot(i, j)
        i += 1

    cost = list(problem.objective) + [-c for c in problem.objective]
    cost += [Fraction(0)] * (width - 2 * n)
    entering = tab.run(cost, range(n_struct))
    z = tab.values(width)
    point = tuple(z[j] - z[n + j] for j in range(n))
    if entering is not None:
        dz = [Fraction(0)] * width
        dz[entering] = Fraction(1)
        for i, b in enumerate(tab.basis):
            dz[b] = -tab.T[i][entering]
        ray = tuple(dz[j] - dz[n + j] for j in range(n))
        return Unbounded(point, ray)
    value = dot(problem.objective, point)
    assert problem.feasible(point)
    return Optimal(point, value)


def maximize(objective, constraints=()):
    return lp_solve(LPProblem(objective, constraints))


def find_feasible(dim, constraints):
    """Any point satisfying ``constraints``, or None."""
    res = lp_solve(LPProblem(zeros(dim), constraints))
    return res.point if isinstance(res, Optimal) else None
