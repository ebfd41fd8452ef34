"""
Convex hull membership with certificates
========================================

Every answer comes with something that can be checked by exact arithmetic:
a convex combination when the point is inside, a separating functional when
it is outside, and an affinely independent support from Carathéodory
reduction.
"""

from fractions import Fraction

from lexsemigroup import caratheodory, natural_combination_witness, point_in_hull
from lexsemigroup.rational import format_rational

square = [(0, 0), (2, 0), (0, 2), (2, 2)]

m = point_in_hull(square, (1, 1))
print("(1,1) inside:", m.inside, [format_rational(c) for c in m.coeffs])

m = point_in_hull(square, (3, 1))
print("(3,1) inside:", m.inside,
      "functional", [format_rational(c) for c in m.functional],
      "threshold", format_rational(m.threshold))
print("certificate checks out:", m.verify(square, (3, 1)))

###############################################################################
# Carathéodory: at most dim+1 points are needed.

points = [(0, 0), (1, 0), (2, 0), (1, 1), (0, 2)]
x = (Fraction(1), Fraction(1, 2))
cert = caratheodory(points, x)
print("support", cert.indices, "coords", [format_rational(c) for c in cert.coords])
print("valid:", cert.verify(points, x))

###############################################################################
# The origin is in the hull exactly when some natural-number combination of
# the points vanishes, i.e. when the generated semigroup contains 0.

for A in ([(2,), (-3,)], [(1, 0), (-1, 0), (0, 1)], [(1, 0), (0, 1)]):
    w = natural_combination_witness(A)
    print(A, "->", None if w is None else w.coeffs)
