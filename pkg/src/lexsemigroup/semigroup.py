"""Finitely generated additive semigroups in Q^n under a matrix order."""

import heapq
from dataclasses import dataclass
from itertools import islice

from .convex import positive_lex_order
from .order import GREATER, is_total_on_space
from .rational import DimensionError, add, check_dim, is_zero, vector, zeros


@dataclass(frozen=True)
class FGSemigroup:
    """Nonempty sums of ``generators``; ``include_identity`` adjoins 0."""

    dim: int
    generators: tuple
    include_identity: bool = False

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError("dim must be a positive integer")
        gens = tuple(vector(g) for g in self.generators)
        if not gens:
            raise ValueError("a semigroup needs at least one generator")
        for i, g in enumerate(gens):
            check_dim(g, self.dim, f"generator {i}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, generators, include_identity=False):
        gens = [vector(g) for g in generators]
        return cls(len(gens[0]) if gens else 0, gens, include_identity)


@dataclass(frozen=True)
class WellOrdered:
    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotWellOrdered:
    witness: tuple

    def __bool__(self):
        return False

    def descending_chain(self, order, length=10):
        """``g, 2g, ..., length*g`` -- strictly decreasing under ``order``."""
        out, cur = [], zeros(len(self.witness))
        for _ in range(length):
            cur = add(cur, self.witness)
            out.append(cur)
        return out


class NotWellOrderedError(ValueError):
    def __init__(self, witness):
        super().__init__("semigroup is not well-ordered by this order")
        self.witness = witness


@dataclass(frozen=True)
class Member:
    multiplicities: tuple


@dataclass(frozen=True)
class NotMemberWithinBound:
    bound: int

    def __bool__(self):
        return False


def _check_order(S, order):
    if order.dim != S.dim:
        raise DimensionError(f"order has dimension {order.dim}, semigroup {S.dim}")
    if not is_total_on_space(order):
        raise ValueError("order must be total on Q^n")


def is_well_ordered(S, order):
    _check_order(S, order)
    for g in S.generators:
        if not is_zero(g) and order.sign(g) is not GREATER:
            return NotWellOrdered(g)
    return WellOrdered()


def _require_well_ordered(S, order):
    verdict = is_well_ordered(S, order)
    if not verdict:
        raise NotWellOrderedError(verdict.witness)


def find_well_order(S):
    """An order well-ordering ``S``, or a NaturalWitness that none exists."""
    return positive_lex_order(list(S.generators))


def iter_ascending(S, order):
    """Generate the elements of ``S`` in strictly increasing order.

    Best-first search from the generators: the least element not yet
    produced is some earlier element (or 0) plus a generator, so it is always
    on the frontier.
    """
    _require_well_ordered(S, order)
    gens = sorted(set(S.generators), key=order.key)
    seen = set()
    if S.include_identity or any(is_zero(g) for g in gens):
        seen.add(zeros(S.dim))
        yield zeros(S.dim)
    heap = []
    for g in gens:
        if g not in seen:
            seen.add(g)
            heapq.heappush(heap, (order.key(g), g))
    while heap:
        _, s = heapq.heappop(heap)
        yield s
        for g in gens:
            t = add(s, g)
            if t not in seen:
                seen.add(t)
                heapq.heappush(heap, (order.key(t), t))


def enumerate_ascending(S, order, n):
    """The ``n`` smallest elements of ``S`` (0 only with include_identity)."""
    if n < 0:
        raise ValueError("count must be nonnegative")
    return list(islice(iter_ascending(S, order), n))


def minimum_element(S, order):
    _require_well_ordered(S, order)
    if S.include_identity or any(is_zero(g) for g in S.generators):
        return zeros(S.dim)
    return min(S.generators, key=order.key)


def bounded_membership(S, x, bound):
    """Search multiplicities with total at most ``bound`` that sum to ``x``.

    NotMemberWithinBound is not a proof of non-membership.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    x = vector(x)
    check_dim(x, S.dim, "x")
    k = len(S.generators)
    if S.include_identity and is_zero(x):
        return Member((0,) * k)
    # breadth-first over distinct sums, one generator per level
    frontier = {zeros(S.dim): (0,) * k}
    seen = set()
    for _ in range(bound):
        nxt = {}
        for s, mult in frontier.items():
            for i, g in enumerate(S.generators):
                t = add(s, g)
                if t in seen or t in nxt:
                    continue
                m = mult[:i] + (mult[i] + 1,) + mult[i + 1:]
                if t == x:
                    return Member(m)
                nxt[t] = m
        seen.update(nxt)
        frontier = nxt
        if not frontier:
            break
    return NotMemberWithinBound(bound)
