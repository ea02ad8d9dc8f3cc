"""Integer partitions: the index language every other module speaks.

A partition is a weakly decreasing tuple of nonnegative integers stored
without trailing zeros, so equality and hashing are structural. Anything
that needs a fixed length (hive boundary assembly, character weights)
pads explicitly at the call site via :func:`padded`.
"""

from __future__ import annotations

from typing import Iterable


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers, trailing zeros stripped.

    Parts are arbitrary-precision ints; stretched boundary labels grow
    linearly in the dilation factor and internal hive labels grow with the
    total weight, so nothing here assumes machine-width values.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        items = []
        for p in parts:
            q = int(p)
            if q != p:
                raise ValueError(f"partition parts must be integers, got {p!r}")
            items.append(q)
        while items and items[-1] == 0:
            items.pop()
        for a, b in zip(items, items[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {items}")
        if items and items[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {items}")
        return super().__new__(cls, items)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)


def weight(p: Partition) -> int:
    """Sum of the parts."""
    return sum(p)


def length(p: Partition) -> int:
    """Number of nonzero parts."""
    return len(Partition(p))


def stretch(p: Partition, t: int) -> Partition:
    """Multiply every part by the dilation factor t (t = 0 gives the empty partition)."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    return Partition(t * part for part in p)


def triple_parity(mu: Partition, nu: Partition, la: Partition) -> str:
    """Parity ("even" or "odd") of |mu| + |nu| + |la|.

    Odd total weight forces the Newell-Littlewood count to vanish, so this
    is the cheapest of the fast-path checks.
    """
    return "even" if (sum(mu) + sum(nu) + sum(la)) % 2 == 0 else "odd"


def padded(p: Partition, n: int) -> tuple[int, ...]:
    """The first n parts, zero-filled: the fixed-length view of p."""
    q = tuple(p)
    if len(q) > n:
        if any(q[n:]):
            raise ValueError(f"partition {q} has more than {n} nonzero parts")
        return q[:n]
    return q + (0,) * (n - len(q))


def parse(text: str) -> Partition:
    """Parse a comma-separated part list, with optional [] or () brackets.

    The empty string (or bare brackets) is the empty partition. Rejects
    sequences that are not weakly decreasing and parts that are not
    nonnegative integers.
    """
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    elif s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return Partition()
    parts = []
    for tok in s.split(","):
        tok = tok.strip()
        if not tok:
            raise ValueError(f"empty component in partition text {text!r}")
        try:
            parts.append(int(tok))
        except ValueError:
            raise ValueError(f"bad partition component {tok!r} in {text!r}") from None
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {text!r}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts not weakly decreasing in {text!r}")
    return Partition(parts)


def render(p: Partition) -> str:
    """Inverse of :func:`parse`: comma-separated parts, no brackets."""
    return ",".join(str(part) for part in Partition(p))
