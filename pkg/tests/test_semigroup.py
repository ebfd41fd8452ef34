import random
from fractions import Fraction

import pytest

from lexsemigroup.convex import NaturalWitness
from lexsemigroup.order import (LESS, MatrixOrder, canonicalize,
                                compare, is_total_on_space)
from lexsemigroup.semigroup import (FGSemigroup, Member, NotMemberWithinBound,
                                    NotWellOrdered, NotWellOrderedError,
                                    WellOrdered, bounded_membership,
                                    enumerate_ascending, find_well_order,
                                    is_well_ordered, iter_ascending,
                                    minimum_element)
from lexsemigroup.rational import DimensionError

from oracles import semigroup_sums, smallest_sums, sorted_by_rows

I2 = MatrixOrder.identity(2)
NAT = MatrixOrder(1, [[1]])


def S(gens, identity=False):
    return FGSemigroup.of(gens, identity)


def test_is_well_ordered_examples():
    assert is_well_ordered(S([(1, 0), (0, 1)]), I2) == WellOrdered()
    assert is_well_ordered(S([(1, 0), (0, -1)]), I2) == NotWellOrdered((0, -1))
    assert is_well_ordered(S([(2, 3)]), MatrixOrder(2, [[-1, 0], [0, 1]])) == NotWellOrdered((2, 3))


def test_is_well_ordered_requires_total_order():
    with pytest.raises(ValueError):
        is_well_ordered(S([(1, 0)]), MatrixOrder(2, [[1, 0]]))
    with pytest.raises(DimensionError):
        is_well_ordered(S([(1, 0)]), NAT)


def test_zero_generator_is_ignored_by_verdict():
    assert is_well_ordered(S([(0, 0), (1, 0)]), I2)
    assert enumerate_ascending(S([(0, 0), (1, 0)]), I2, 3) == [(0, 0), (1, 0), (2, 0)]


def test_find_well_order_examples():
    sg = S([(1, 0), (-1, 1)])
    M = find_well_order(sg)
    assert is_well_ordered(sg, M)
    assert find_well_order(S([(1, 1), (-2, -2)])) == NaturalWitness((2, 1))
    assert find_well_order(S([(5,)])) == NAT


def test_enumerate_examples():
    # frozen from the brute-force oracle: all sums of <= n generators, sorted
    sg = S([(0, 1), (1, 0)])
    expected = sorted_by_rows(semigroup_sums(sg.generators, 4), I2.rows)[:4]
    assert expected == [(0, 1), (0, 2), (0, 3), (0, 4)]
    assert enumerate_ascending(sg, I2, 4) == expected
    expected = sorted_by_rows(semigroup_sums([(2,), (3,)], 6), NAT.rows)[:6]
    assert expected == [(k,) for k in range(2, 8)]
    assert enumerate_ascending(S([(2,), (3,)]), NAT, 6) == expected
    assert enumerate_ascending(S([(1, 0)]), I2, 3) == [(1, 0), (2, 0), (3, 0)]


def test_enumerate_with_identity_and_duplicates():
    sg = S([(1,), (1,), (2,)], identity=True)
    assert enumerate_ascending(sg, NAT, 4) == [(0,), (1,), (2,), (3,)]


def test_enumerate_rejects_non_well_ordered():
    with pytest.raises(NotWellOrderedError) as info:
        enumerate_ascending(S([(1, 0), (0, -1)]), I2, 3)
    assert info.value.witness == (0, -1)


def test_iter_ascending_is_lazy_generator():
    it = iter_ascending(S([(1, 0), (0, 1)]), I2)
    assert next(it) == (0, 1)
    assert next(it) == (0, 2)


def test_bounded_membership_examples():
    sg = S([(0, 1), (1, 0)])
    assert bounded_membership(sg, (2, 3), 5) == Member((3, 2))
    assert bounded_membership(S([(2,), (3,)]), (1,), 10) == NotMemberWithinBound(10)
    assert bounded_membership(S([(1, 1)]), (2, 2), 2) == Member((2,))
    assert not bounded_membership(S([(1, 1)]), (3, 3), 2)
    with pytest.raises(ValueError):
        bounded_membership(sg, (1, 1), 0)


def test_bounded_membership_soundness():
    rng = random.Random(3)
    for _ in range(100):
        gens = [tuple(rng.randint(-3, 3) for _ in range(2)) for _ in range(rng.randint(1, 3))]
        x = tuple(rng.randint(-4, 4) for _ in range(2))
        res = bounded_membership(S(gens), x, 4)
        sums = semigroup_sums(gens, 4)
        if isinstance(res, Member):
            assert 1 <= sum(res.multiplicities) <= 4
            assert tuple(sum(m * g[j] for m, g in zip(res.multiplicities, gens))
                         for j in range(2)) == x
        else:
            assert x not in sums


def test_minimum_examples():
    assert minimum_element(S([(2,), (3,)]), NAT) == (2,)
    assert minimum_element(S([(0, 1), (1, 0)]), I2) == (0, 1)
    assert minimum_element(S([(1, 0)], identity=True), I2) == (0, 0)
    with pytest.raises(NotWellOrderedError):
        minimum_element(S([(-1,)]), NAT)


def test_witness_chain_decreases():
    verdict = is_well_ordered(S([(3, -1)]), MatrixOrder(2, [[0, 1], [1, 0]]))
    chain = verdict.descending_chain(MatrixOrder(2, [[0, 1], [1, 0]]))
    assert len(chain) == 10
    M = MatrixOrder(2, [[0, 1], [1, 0]])
    assert all(compare(M, b, a) is LESS for a, b in zip(chain, chain[1:]))


def _random_total_order(rng, dim):
    while True:
        M = MatrixOrder(dim, [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim)])
        if is_total_on_space(M):
            return M


def test_find_well_order_consistency():
    rng = random.Random(5)
    witnesses = 0
    for _ in range(40):
        dim = rng.randint(1, 3)
        sg = S([tuple(rng.randint(-3, 3) for _ in range(dim)) for _ in range(rng.randint(1, 4))])
        res = find_well_order(sg)
        if isinstance(res, MatrixOrder):
            assert is_well_ordered(sg, res)
            assert canonicalize(res) == res
        else:
            witnesses += 1
            assert res.verify(list(sg.generators))
            for _ in range(100):
                assert not is_well_ordered(sg, _random_total_order(rng, dim))
    assert witnesses


def test_enumeration_matches_full_oracle_small():
    rng = random.Random(13)
    done = 0
    while done < 10:
        dim = rng.randint(1, 2)
        M = _random_total_order(rng, dim)
        gens = [tuple(rng.randint(-3, 3) for _ in range(dim)) for _ in range(rng.randint(1, 3))]
        sg = S(gens)
        if not is_well_ordered(sg, M):
            continue
        n = 8
        got = enumerate_ascending(sg, M, n)
        expected = sorted_by_rows(semigroup_sums(gens, n), M.rows)[:n]
        assert got == expected
        assert got == smallest_sums(gens, M.rows, n)
        done += 1


def test_rational_generators():
    sg = S([(Fraction(1, 2),), (Fraction(1, 3),)])
    assert enumerate_ascending(sg, NAT, 5) == [
        (Fraction(1, 3),), (Fraction(1, 2),), (Fraction(2, 3),),
        (Fraction(5, 6),), (Fraction(1),)]
