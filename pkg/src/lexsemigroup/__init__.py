"""Exact lexicographic orders on Q^n, convex certificates and ordered semigroups."""

from .convex import (CaratheodoryCertificate, HullMembership, MembershipError,
                     NaturalWitness, PointSet, SeparationResult, caratheodory,
                     natural_combination_witness, point_in_hull,
                     positive_lex_order, separate_from_hull)
from .linalg import kernel_basis, rank, solve_affine
from .lp import (Constraint, Infeasible, LPProblem, Optimal, Unbounded,
                 lp_solve)
from .order import (EQUAL, GREATER, LESS, FlagDescription, FormalDifference,
                    MatrixOrder, Ordering, canonicalize, compare, flag_of,
                    group_extend_compare, is_total_on_space, orders_equal)
from .rational import DimensionError, format_rational, to_rational, vector
from .semigroup import (FGSemigroup, Member, NotMemberWithinBound,
                        NotWellOrdered, NotWellOrderedError, WellOrdered,
                        bounded_membership, enumerate_ascending,
                        find_well_order, is_well_ordered, iter_ascending,
                        minimum_element)

__version__ = "0.1.0"
