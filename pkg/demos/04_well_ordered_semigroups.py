"""
Well-ordered semigroups and ascending enumeration
=================================================

A finitely generated semigroup in Q^n is well-ordered by a total matrix order
exactly when every nonzero generator is positive. The elements can then be
listed from the smallest one up, even when the order type is larger than
omega (pure lex on the nonnegative quadrant).
"""

from lexsemigroup import (FGSemigroup, MatrixOrder, bounded_membership,
                          enumerate_ascending, find_well_order,
                          is_well_ordered, minimum_element)
from lexsemigroup.rational import format_rational


def fmt(v):
    return "(" + ", ".join(format_rational(a) for a in v) + ")"


quadrant = FGSemigroup(2, [(1, 0), (0, 1)])
lex = MatrixOrder.identity(2)
print("Z^2_{>=0} under lex:", is_well_ordered(quadrant, lex))
print("first elements:", [fmt(v) for v in enumerate_ascending(quadrant, lex, 5)])

flipped = MatrixOrder(2, [[1, 0], [0, -1]])
verdict = is_well_ordered(quadrant, flipped)
print("with the second row negated, witness:", fmt(verdict.witness))
print("decreasing chain:", [fmt(v) for v in verdict.descending_chain(flipped, 4)])

###############################################################################
# Numerical semigroup <2, 3> under the natural order.

S = FGSemigroup(1, [(2,), (3,)])
nat = MatrixOrder(1, [[1]])
print("<2,3>:", [fmt(v) for v in enumerate_ascending(S, nat, 8)])
print("minimum:", fmt(minimum_element(S, nat)))
print("1 in <2,3> (10 terms)?", bounded_membership(S, (1,), 10))
print("7 in <2,3>?", bounded_membership(S, (7,), 10))

###############################################################################
# Searching for a well-order.

for gens in ([(1, 0), (-1, 1)], [(1, 1), (-2, -2)]):
    res = find_well_order(FGSemigroup(2, gens))
    if isinstance(res, MatrixOrder):
        print(gens, "-> order", [fmt(r) for r in res.rows])
    else:
        print(gens, "-> impossible, witness", res.coeffs)
