import random

import pytest

from nlhive.khive_nl import count_nl_hive
from nlhive.partition import Partition
from nlhive.weylchar import (RootSystem, _delta_by_product, _delta_support,
                             character, tensor_multiplicity,
                             verify_stabilization, weyl_dim)


def test_known_dimensions():
    assert character("B", 3, (2, 1, 1)).dimension() == 189
    assert character("C", 3, (2, 1, 1)).dimension() == 70
    assert character("D", 3, (2, 1, 1)).dimension() == 45
    assert character("A", 4, (3, 1)).dimension() == 45
    assert character("B", 2, (1,)).dimension() == 5
    assert character("C", 2, (1,)).dimension() == 4
    assert character("D", 2, (1, 1)).dimension() == 3


def test_dimension_matches_product_formula():
    rng = random.Random(19)
    for _ in range(20):
        family = rng.choice("ABCD")
        rank = rng.randint(2, 3)
        la = Partition(sorted((rng.randint(0, 3) for _ in range(rank)),
                              reverse=True))
        assert character(family, rank, la).dimension() == \
            weyl_dim(family, rank, la)


def test_characters_are_weyl_invariant():
    rng = random.Random(23)
    for _ in range(10):
        family = rng.choice("ABCD")
        rank = rng.randint(2, 3)
        la = Partition(sorted((rng.randint(0, 2) for _ in range(rank)),
                              reverse=True))
        ch = character(family, rank, la)
        elements = list(RootSystem(family, rank).weyl_elements())
        for perm, signs, _ in rng.sample(elements, min(4, len(elements))):
            assert ch.apply_weyl(perm, signs).terms == ch.poly.terms


def test_highest_weight_multiplicity_is_one():
    ch = character("C", 3, (2, 2))
    assert ch.weight_multiplicity((2, 2, 0)) == 1
    assert ch.weight_multiplicity((3, 1, 0)) == 0


def test_delta_support_matches_slow_product():
    for family in "ABCD":
        for rank in (2, 3):
            assert dict(_delta_support(family, rank)) == \
                _delta_by_product(family, rank)


def test_tensor_with_trivial_factor_projects():
    rng = random.Random(29)
    for _ in range(20):
        family = rng.choice("ABCD")
        rank = rng.randint(2, 3)
        mu = Partition(sorted((rng.randint(0, 2) for _ in range(rank)),
                              reverse=True))
        la = Partition(sorted((rng.randint(0, 2) for _ in range(rank)),
                              reverse=True))
        got = tensor_multiplicity(family, rank, mu, (), la)
        assert got == (1 if tuple(mu) == tuple(la) else 0)


def test_tensor_multiplicities_sum_to_dimension_product():
    # decomposing the full tensor square over all possible highest
    # weights must account for every vector exactly once
    family, rank = "C", 2
    mu, nu = (1, 1), (1,)
    total = 0
    for l1 in range(0, 4):
        for l2 in range(0, l1 + 1):
            la = Partition((l1, l2))
            mult = tensor_multiplicity(family, rank, mu, nu, la)
            assert mult >= 0
            total += mult * character(family, rank, la).dimension()
    assert total == character(family, rank, mu).dimension() * \
        character(family, rank, nu).dimension()


def test_reference_tensor_values_match_counts():
    # stretched (2,1,1) triple at t = 1, 2 across the orthogonal and
    # symplectic families at the stabilization threshold and beyond
    want = [count_nl_hive((2 * t, t, t), (2 * t, t, t), (2 * t, t, t))
            for t in (1, 2)]
    assert want == [4, 18]
    for family, rank, expect in (
            ("B", 3, [4, 11]), ("C", 3, [1, 5]), ("D", 3, [1, 1]),
            ("D", 4, [7, 29]), ("B", 4, [4, 18]), ("C", 4, [4, 18])):
        got = [tensor_multiplicity(family, rank, (2 * t, t, t),
                                   (2 * t, t, t), (2 * t, t, t))
               for t in (1, 2)]
        assert got == expect, (family, rank)


def test_verify_stabilization_sweep():
    report = verify_stabilization((2, 1), (1, 1), (2, 1), t_max=2)
    assert report["threshold"] == 4
    assert report["nl"] == [2, 4]
    ranks = {row["rank"]: row for row in report["ranks"]}
    assert set(ranks) == {2, 3, 4, 5}
    assert ranks[2]["at_threshold"] is False
    for rank in (4, 5):
        assert ranks[rank]["at_threshold"] is True
        for family in "BCD":
            assert ranks[rank]["families"][family] == [2, 4]
    # below the threshold the families genuinely disagree with the count
    assert ranks[2]["families"]["D"] != [2, 4]


def test_verify_stabilization_no_usable_ranks():
    with pytest.raises(ValueError):
        verify_stabilization((1,) * 7, (1,) * 7, (1,), t_max=1)


def test_root_system_validation():
    with pytest.raises(ValueError):
        RootSystem("E", 3)
    with pytest.raises(ValueError):
        RootSystem("D", 1)
    with pytest.raises(ValueError):
        RootSystem("B", 99)
    with pytest.raises(ValueError):
        character("B", 2, (1, 1, 1))


def test_weyl_group_orders():
    # rank counts coordinates, so the permutation family at rank r is S_r
    assert RootSystem("A", 3).order() == 6
    assert RootSystem("B", 3).order() == 48
    assert RootSystem("C", 2).order() == 8
    assert RootSystem("D", 4).order() == 192
    for family in "ABCD":
        system = RootSystem(family, 3)
        assert sum(1 for _ in system.weyl_elements()) == system.order()
