"""
Separating points with lexicographic half-spaces
================================================

A point outside a convex hull can be put strictly below the whole hull by a
total lexicographic order. For the cone generated by a point set the origin
needs several functionals in general: each new row only has to decide the
points on which all earlier rows vanish.
"""

from lexsemigroup import (MatrixOrder, MembershipError, NaturalWitness,
                          compare, positive_lex_order, separate_from_hull)
from lexsemigroup.rational import format_rational


def show(order):
    return [[format_rational(a) for a in r] for r in order.rows]


A = [(0, 0), (2, 0)]
sep = separate_from_hull(A, (1, 1))
print("order", show(sep.order), "valid:", sep.verify(A))

try:
    separate_from_hull([(0, 0), (2, 2)], (1, 1))
except MembershipError as exc:
    print("inside; certificate", exc.certificate.indices,
          [format_rational(c) for c in exc.certificate.coords])

###############################################################################
# Positive orders. (-1,1) sits on the boundary of the first functional's
# half-plane, so a second row is needed to make it positive.

G = [(1, 1), (-1, 1), (1, 0)]
M = positive_lex_order(G)
print("order", show(M))
for g in G:
    print("  ", g, compare(M, g, (0, 0)), "0")

###############################################################################
# A line in the cone makes it impossible.

res = positive_lex_order([(1, 0), (-1, 0), (0, 1)])
assert isinstance(res, NaturalWitness)
print("no positive order, witness", res.coeffs)
assert not isinstance(res, MatrixOrder)
