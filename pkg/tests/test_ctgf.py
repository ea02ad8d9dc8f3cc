import random

import pytest

from nlhive.ctgf_oracle import (TruncationError, build_factors,
                                nl_constant_term, nl_gf_truncated)
from nlhive.khive_nl import count_nl_hive
from nlhive.partition import Partition


def random_partition(rng, max_len=2, max_part=3):
    return Partition(sorted((rng.randint(0, max_part) for _ in range(max_len)),
                            reverse=True))


def test_worked_values():
    assert nl_constant_term((5, 3), (4, 1), (5, 2)) == 6
    assert nl_constant_term((5, 3), (4, 1), (4, 2)) == 0


def test_empty_triple():
    assert nl_constant_term((), (), ()) == 1


def test_agrees_with_enumeration_on_small_triples():
    rng = random.Random(13)
    for _ in range(25):
        mu = random_partition(rng)
        nu = random_partition(rng)
        la = random_partition(rng, max_len=3)
        if la.length > mu.length + nu.length:
            continue
        assert nl_constant_term(mu, nu, la) == count_nl_hive(mu, nu, la)


def test_trailing_zeros_do_not_matter():
    assert nl_constant_term((5, 3, 0), (4, 1, 0, 0), (5, 2, 0)) == 6


def test_length_precondition():
    # this route needs the third partition to fit in the combined
    # variable group, unlike the enumeration routes
    with pytest.raises(ValueError):
        nl_constant_term((2,), (2,), (1, 1, 1))
    assert count_nl_hive((2,), (2,), (1, 1, 1)) == 0


def test_group_size_validation():
    with pytest.raises(ValueError):
        build_factors(2, 1, 4)


def test_shrunken_window_refuses():
    with pytest.raises(TruncationError):
        nl_constant_term((5, 3), (4, 1), (5, 2), y_cap=2, z_cap=2)


def test_generous_window_still_exact():
    # wide explicit caps keep every contributing term, so the shrunken
    # path and the default path must agree
    assert nl_constant_term((2, 1), (2, 1), (2, 1), y_cap=12, z_cap=12) == \
        nl_constant_term((2, 1), (2, 1), (2, 1))


def test_truncated_series_matches_enumeration():
    got = nl_gf_truncated((2,), (1,), (2, 1), 3)
    want = [count_nl_hive((2 * t,), (t,), (2 * t, t)) for t in range(4)]
    assert got == want == [1, 1, 1, 1]
    got = nl_gf_truncated((1, 1), (1, 1), (1, 1), 4)
    want = [count_nl_hive((t, t), (t, t), (t, t)) for t in range(5)]
    assert got == want == [1, 1, 2, 2, 3]
