"""
Lexicographic orders given by a matrix
======================================

A stack of linear functionals orders Q^n: two vectors are compared by the
first functional that tells them apart. Different stacks can define the same
order, and ``canonicalize`` picks one representative.
"""

from lexsemigroup import (FormalDifference, MatrixOrder, canonicalize, compare,
                          flag_of, group_extend_compare, is_total_on_space,
                          orders_equal)
from lexsemigroup.rational import format_rational


def show(order):
    return [[format_rational(a) for a in r] for r in order.rows]


lex = MatrixOrder.identity(2)
print("(1,0) vs (0,5) under lex:", compare(lex, (1, 0), (0, 5)))

swapped = MatrixOrder(2, [[0, 1], [1, 0]])
print("(1,0) vs (0,1) with the coordinates swapped:", compare(swapped, (1, 0), (0, 1)))

###############################################################################
# A single functional only gives a preorder: it cannot see its own kernel.

weight = MatrixOrder(2, [[1, 1]])
print("is [[1,1]] total?", is_total_on_space(weight))
print("(1,-1) vs (0,0):", compare(weight, (1, -1), (0, 0)))

###############################################################################
# Positive rescaling and adding earlier rows to later ones keep the order.

M = MatrixOrder(2, [[2, 4], [1, 3]])
print("canonical form of", show(M), "->", show(canonicalize(M)))
print("identity == [[2,0],[5,3]]?", orders_equal(lex, MatrixOrder(2, [[2, 0], [5, 3]])))

# Adding a *later* row to an earlier one is not allowed: this changes the order.
print("identity == [[1,10],[0,1]]?", orders_equal(lex, MatrixOrder(2, [[1, 10], [0, 1]])))

###############################################################################
# The order is determined by its flag of kernels and the chosen half-spaces.

flag = flag_of(MatrixOrder(3, [[0, 2, 0], [1, 1, 0], [0, 0, -1]]))
for dim, basis in flag.subspaces:
    print(f"  dim {dim}:", [[format_rational(a) for a in b] for b in basis])

###############################################################################
# Formal differences are compared without leaving the semigroup.

a1 = FormalDifference((3,), (1,))
a2 = FormalDifference((5,), (4,))
print("(3-1) vs (5-4):", group_extend_compare(MatrixOrder(1, [[1]]), a1, a2))
