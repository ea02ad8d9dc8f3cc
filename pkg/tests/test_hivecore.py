import itertools

import pytest

from nlhive._hivecore import Budget, BudgetExceededError, LinearSystem


def brute_count(sys):
    """Reference count by full box enumeration."""
    total = 0
    for point in itertools.product(range(sys.box_lo, sys.box_hi + 1),
                                   repeat=sys.nvars):
        ok = True
        for coeffs, const in sys.rows:
            if sum(c * point[j] for j, c in coeffs.items()) + const < 0:
                ok = False
                break
        if ok:
            total += 1
    return total


def test_unconstrained_box():
    sys = LinearSystem(2, box_hi=3)
    assert sys.count() == 16


def test_zero_variables_is_one_point():
    sys = LinearSystem(0, box_hi=5)
    assert sys.count() == 1


def test_failed_precondition_row():
    sys = LinearSystem(0, box_hi=5)
    sys.add_row({}, -1)
    assert sys.count() == 0


def test_simplex_count():
    # x + y + z <= 4 inside a box: C(7,3) lattice points
    sys = LinearSystem(3, box_hi=4)
    sys.add_row({0: -1, 1: -1, 2: -1}, 4)
    assert sys.count() == 35


def test_matches_brute_force_on_random_systems():
    import random
    rng = random.Random(11)
    for _ in range(60):
        nvars = rng.randint(1, 4)
        sys = LinearSystem(nvars, box_hi=rng.randint(1, 5))
        for _ in range(rng.randint(0, 5)):
            coeffs = {j: rng.randint(-2, 2) for j in range(nvars)
                      if rng.random() < 0.7}
            sys.add_row(coeffs, rng.randint(-3, 6))
        assert sys.count() == brute_count(sys)


def test_solutions_agrees_with_count():
    sys = LinearSystem(3, box_hi=3)
    sys.add_row({0: 1, 1: -1}, 0)   # x0 >= x1
    sys.add_row({1: 1, 2: -1}, 0)   # x1 >= x2
    pts = list(sys.solutions())
    assert len(pts) == sys.count()
    assert all(a >= b >= c for a, b, c in pts)
    assert len(set(pts)) == len(pts)


def test_add_row_rejects_unknown_variable():
    sys = LinearSystem(2, box_hi=1)
    with pytest.raises(ValueError):
        sys.add_row({2: 1}, 0)


def test_node_budget_trips():
    sys = LinearSystem(6, box_hi=9)
    with pytest.raises(BudgetExceededError) as info:
        sys.count(Budget(max_nodes=1000))
    assert info.value.nodes is not None


def test_budget_rejects_nonpositive_limits():
    with pytest.raises(ValueError):
        Budget(max_nodes=0)
    with pytest.raises(ValueError):
        Budget(max_seconds=0)
