import itertools
import random

import pytest

from nlhive._hivecore import Budget, BudgetExceededError
from nlhive.khive_nl import (CompositeHive, count_nl_hive, count_nl_lrsum,
                             coupling_weights, iter_nl_hives, k_polytope)
from nlhive.partition import Partition


def partitions_up_to(weight, max_len):
    out = [Partition(())]
    acc = []

    def rec(rem, prev):
        if acc:
            out.append(Partition(acc))
        if len(acc) == max_len:
            return
        for v in range(min(rem, prev), 0, -1):
            acc.append(v)
            rec(rem - v, v)
            acc.pop()

    rec(weight, weight)
    return out


def random_partition(rng, max_len=3, max_part=5):
    return Partition(sorted((rng.randint(0, max_part) for _ in range(max_len)),
                            reverse=True))


def test_worked_counts():
    assert count_nl_hive((5, 3), (4, 1), (5, 2)) == 6
    assert count_nl_hive((5, 3), (4, 1), (4, 2)) == 0


def test_small_hand_checked_values():
    assert count_nl_hive((), (), ()) == 1
    assert count_nl_hive((2,), (1,), (1,)) == 1
    assert count_nl_hive((3, 1), (), (3, 1)) == 1
    assert count_nl_hive((3, 1), (), (2, 2)) == 0
    assert count_nl_hive((1,), (1,), (1, 1)) == 1
    assert count_nl_hive((1,), (1,), (2,)) == 1
    assert count_nl_hive((1,), (1,), ()) == 1


def test_coupling_weights():
    assert coupling_weights(Partition((5, 3)), Partition((4, 1)),
                            Partition((5, 2))) == (3, 5, 2)
    # odd total weight has no consistent corner split
    assert coupling_weights(Partition((1,)), Partition((1,)),
                            Partition((1,))) is None
    # negative corner weight
    assert coupling_weights(Partition((4, 4)), Partition((1,)),
                            Partition((1,))) is None


def test_parity_vanishing():
    rng = random.Random(3)
    for _ in range(80):
        mu = random_partition(rng)
        nu = random_partition(rng)
        la = random_partition(rng)
        if (mu.weight + nu.weight + la.weight) % 2:
            assert count_nl_hive(mu, nu, la) == 0


def test_full_permutation_symmetry():
    rng = random.Random(17)
    for _ in range(25):
        mu = random_partition(rng, max_part=4)
        nu = random_partition(rng, max_part=4)
        la = random_partition(rng, max_part=4)
        base = count_nl_hive(mu, nu, la)
        for p in itertools.permutations((mu, nu, la)):
            assert count_nl_hive(*p) == base


def test_grid_padding_does_not_change_count():
    assert count_nl_hive((5, 3), (4, 1), (5, 2), n=4) == 6
    assert count_nl_hive((2,), (1,), (1,), n=3) == 1


def test_cuts_toggle_is_invisible():
    rng = random.Random(29)
    for _ in range(30):
        mu = random_partition(rng, max_part=4)
        nu = random_partition(rng, max_part=4)
        la = random_partition(rng, max_part=4)
        assert (count_nl_hive(mu, nu, la, cuts=True)
                == count_nl_hive(mu, nu, la, cuts=False))


def test_hive_count_equals_lr_sum_exhaustively():
    pool = partitions_up_to(4, 2)
    for mu in pool:
        for nu in pool:
            for la in pool:
                assert count_nl_hive(mu, nu, la) == count_nl_lrsum(mu, nu, la)


def test_hive_count_equals_lr_sum_random_larger():
    rng = random.Random(31)
    for _ in range(40):
        mu = random_partition(rng, max_len=3, max_part=5)
        nu = random_partition(rng, max_len=3, max_part=5)
        la = random_partition(rng, max_len=3, max_part=5)
        assert count_nl_hive(mu, nu, la) == count_nl_lrsum(mu, nu, la)


def test_iter_hives_validates_and_splits():
    hives = list(iter_nl_hives((5, 3), (4, 1), (5, 2)))
    assert len(hives) == count_nl_hive((5, 3), (4, 1), (5, 2))
    wa, wb, wg = coupling_weights(Partition((5, 3)), Partition((4, 1)),
                                  Partition((5, 2)))
    seen = set()
    for hive in hives:
        assert isinstance(hive, CompositeHive)
        assert hive.is_valid()
        alpha, beta, gamma = hive.gluing_partitions()
        assert (alpha.weight, beta.weight, gamma.weight) == (wa, wb, wg)
        seen.add(tuple(sorted(hive.labels.items())))
    assert len(seen) == len(hives)


def test_polytope_unknown_counts():
    assert k_polytope((1,), (1,), (2,)).num_unknowns == 5
    assert k_polytope((2, 1), (2, 1), (1, 1), n=2).num_unknowns == 12
    assert k_polytope((2, 1, 1), (2, 1, 1), (2, 1, 1)).num_unknowns == 22


def test_polytope_accepts_exactly_the_hives():
    mu, nu, la = Partition((5, 3)), Partition((4, 1)), Partition((5, 2))
    system = k_polytope(mu, nu, la)
    order = {v: j for j, v in enumerate(system.vertex_order)}

    def satisfies(labels):
        vec = [labels[v] for v in system.vertex_order]
        for coeffs, rhs in system.equalities:
            if sum(c * vec[j] for j, c in coeffs) != rhs:
                return False
        for coeffs, rhs in system.inequalities:
            if sum(c * vec[j] for j, c in coeffs) < rhs:
                return False
        return True

    hives = list(iter_nl_hives(mu, nu, la))
    assert all(satisfies(h.labels) for h in hives)
    # perturbing any single interior label off a valid hive must break
    # some constraint or land on another enumerated hive
    all_labelings = {tuple(sorted(h.labels.items())) for h in hives}
    base = dict(hives[0].labels)
    hits = 0
    for v in system.vertex_order:
        for delta in (-1, 1):
            cand = dict(base)
            cand[v] += delta
            if satisfies(cand):
                key = tuple(sorted(cand.items()))
                assert key in all_labelings
                hits += 1
    assert hits < len(system.vertex_order) * 2


def test_polytope_brute_force_tiny():
    system = k_polytope((1,), (1,), (2,))
    hi = 2
    count = 0
    for point in itertools.product(range(hi + 1),
                                   repeat=system.num_unknowns):
        if all(sum(c * point[j] for j, c in coeffs) == rhs
               for coeffs, rhs in system.equalities) and \
           all(sum(c * point[j] for j, c in coeffs) >= rhs
               for coeffs, rhs in system.inequalities):
            count += 1
    assert count == count_nl_hive((1,), (1,), (2,)) == 1


def test_polytope_degrees_of_freedom_matches_search_space():
    for triple, expect_dof in (
            (((1,), (1,), (2,)), 0),
            (((2, 1), (2, 1), (1, 1)), 3),
            (((2, 1, 1), (2, 1, 1), (2, 1, 1)), 9)):
        system = k_polytope(*triple)
        assert system.degrees_of_freedom == expect_dof


def test_polytope_serializes():
    system = k_polytope((2, 1), (2, 1), (1, 1))
    text = system.to_text()
    assert "==" in text and ">=" in text
    import json
    data = json.loads(system.to_json())
    assert data["n"] == 2
    assert data["sense"] == ">="
    assert len(data["vertex_order"]) == system.num_unknowns


def test_tiny_budget_trips():
    with pytest.raises(BudgetExceededError):
        count_nl_hive((9, 7, 5), (8, 6, 2), (9, 5, 3),
                      budget=Budget(max_nodes=50))


def test_stretched_worked_sequences():
    # frozen after computing via enumeration; the acceptance suite checks
    # these same numbers against the reference generating functions
    got_a = [count_nl_hive(tuple(x * t for x in (5, 3)),
                           tuple(x * t for x in (4, 1)),
                           tuple(x * t for x in (5, 2)))
             for t in range(5)]
    assert got_a == [1, 6, 19, 43, 82]
    got_b = [count_nl_hive(tuple(x * t for x in (5, 3)),
                           tuple(x * t for x in (4, 1)),
                           tuple(x * t for x in (4, 2)))
             for t in range(5)]
    assert got_b == [1, 0, 15, 0, 61]
