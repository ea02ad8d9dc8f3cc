import random

from nlhive.hive_lr import (count_lr, count_lr_auto, iter_lr_hives,
                            schur_coefficient_oracle, schur_expand_product)
from nlhive.partition import Partition


def random_partition(rng, max_len=3, max_part=5):
    parts = sorted((rng.randint(0, max_part) for _ in range(max_len)),
                   reverse=True)
    return Partition(parts)


def test_worked_count():
    assert count_lr((6, 5, 3), (6, 4, 1), (9, 7, 5, 4)) == 7


def test_worked_stretch_values():
    # frozen after computing via enumeration; matches the cubic
    # (t+1)(5t^2+10t+6)/6 row by row
    want = [1, 7, 23, 54, 105, 181, 287]
    got = [count_lr(tuple(x * t for x in (6, 5, 3)),
                    tuple(x * t for x in (6, 4, 1)),
                    tuple(x * t for x in (9, 7, 5, 4)))
           for t in range(7)]
    assert got == want
    for t, v in enumerate(want):
        assert v * 6 == (t + 1) * (5 * t * t + 10 * t + 6)


def test_pieri_cases():
    assert count_lr((1,), (1,), (2,)) == 1
    assert count_lr((1,), (1,), (1, 1)) == 1
    assert count_lr((1,), (1,), (3,)) == 0
    assert count_lr((2, 1), (2, 1), (3, 2, 1)) == 2


def test_empty_partners():
    assert count_lr((), (), ()) == 1
    assert count_lr((3, 1), (), (3, 1)) == 1
    assert count_lr((), (3, 1), (3, 1)) == 1
    assert count_lr((3, 1), (), (2, 2)) == 0


def test_weight_mismatch_is_zero():
    assert count_lr((2, 1), (1,), (2, 1)) == 0


def test_length_condition_is_zero():
    assert count_lr((1,), (1,), (1, 1, 1)) == 0


def test_frame_padding_does_not_change_count():
    assert count_lr((2, 1), (2, 1), (3, 2, 1), n=5) == 2
    assert count_lr((1,), (1,), (2,), n=4) == 1


def test_symmetry_in_first_two_arguments():
    rng = random.Random(23)
    for _ in range(40):
        mu = random_partition(rng)
        nu = random_partition(rng)
        la = random_partition(rng, max_len=4, max_part=8)
        assert count_lr(mu, nu, la) == count_lr(nu, mu, la)


def test_matches_schur_oracle_on_random_triples():
    rng = random.Random(7)
    for _ in range(150):
        mu = random_partition(rng)
        nu = random_partition(rng)
        # aim at the right weight half the time so nonzero values appear
        la = random_partition(rng, max_len=4, max_part=8)
        assert count_lr(mu, nu, la) == schur_coefficient_oracle(mu, nu, la)


def test_oracle_full_products_match_counts():
    rng = random.Random(41)
    for _ in range(15):
        mu = random_partition(rng, max_len=2, max_part=4)
        nu = random_partition(rng, max_len=2, max_part=4)
        dec = schur_expand_product(mu, nu)
        assert all(c > 0 for c in dec.values())
        # total multiplicity-weighted dimension is conserved: check the
        # decomposition against the hive count lambda by lambda
        for la, c in dec.items():
            assert count_lr(mu, nu, la) == c
        # and a lambda outside the support counts zero
        absent = Partition((mu.weight + nu.weight,))
        if absent not in dec:
            assert count_lr(mu, nu, absent) == 0


def test_iter_hives_yields_valid_distinct_hives():
    hives = list(iter_lr_hives((2, 1), (2, 1), (3, 2, 1)))
    assert len(hives) == 2
    seen = set()
    for hive in hives:
        assert hive.is_valid()
        seen.add(tuple(sorted(hive.labels.items())))
    assert len(seen) == 2


def test_count_lr_auto_caches():
    assert count_lr_auto((6, 5, 3), (6, 4, 1), (9, 7, 5, 4)) == 7
    assert count_lr_auto((6, 5, 3), (6, 4, 1), (9, 7, 5, 4)) == 7
