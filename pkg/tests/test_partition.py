import pytest

from nlhive.partition import (Partition, padded, parse, render, stretch,
                              triple_parity)


def test_accepts_weakly_decreasing_nonnegative():
    p = Partition((5, 3, 3, 1))
    assert p.weight == 12
    assert p.length == 4


def test_trailing_zeros_are_dropped():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    assert Partition((0, 0)) == Partition(())


def test_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_rejects_negative_parts():
    with pytest.raises(ValueError):
        Partition((3, -1))


def test_empty_partition():
    p = Partition(())
    assert p.weight == 0
    assert p.length == 0


def test_stretch_scales_every_part():
    assert stretch(Partition((5, 3)), 3) == Partition((15, 9))
    assert stretch(Partition((5, 3)), 0) == Partition(())


def test_padded_extends_with_zeros():
    assert padded(Partition((2, 1)), 4) == (2, 1, 0, 0)
    with pytest.raises(ValueError):
        padded(Partition((2, 1, 1)), 2)


def test_triple_parity():
    assert triple_parity(Partition((5, 3)), Partition((4, 1)),
                         Partition((5, 2))) == "even"
    assert triple_parity(Partition((5, 3)), Partition((4, 1)),
                         Partition((4, 2))) == "odd"


def test_parse_round_trips():
    for text in ("5,3", "", "1", "9,7,5,4"):
        assert render(parse(text)) == text


def test_parse_strips_brackets():
    assert parse("[3, 1]") == Partition((3, 1))
    assert parse("(2,2)") == Partition((2, 2))
