"""Littlewood-Richardson coefficients two independent ways.

The primary route counts integer hives: labelings of a triangular grid
with fixed boundary and rhombus concavity conditions. The oracle route
never touches hives; it multiplies Schur polynomials expanded from
Gelfand-Tsetlin patterns and peels the product back into a sum of Schur
terms. The two routes share no code beyond the Partition type so that
each can catch the other out.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from ._hivecore import Budget, LinearSystem
from .partition import Partition, padded


def _prefix_sums(parts: tuple[int, ...], n: int) -> list[int]:
    out = [0]
    for k in range(n):
        out.append(out[-1] + (parts[k] if k < len(parts) else 0))
    return out


@dataclass(frozen=True)
class HiveFrame:
    """Triangular grid of side n whose boundary is pinned by (mu, nu, la).

    Vertices are pairs (h, i) with 0 <= h <= n and 0 <= i <= n - h: h is
    the height of a row above the base and i the position within the row.
    The left edge carries the running totals of mu from bottom to top, the
    slanted edge continues with the running totals of nu from top to
    bottom, and the base carries the running totals of la from left to
    right. Corners agree because a nonzero count needs |la| = |mu| + |nu|.
    """

    n: int
    mu: Partition
    nu: Partition
    la: Partition

    def __post_init__(self):
        if self.n < max(self.mu.length, self.nu.length, self.la.length):
            raise ValueError("frame side too small for the given partitions")

    def vertices(self) -> list[tuple[int, int]]:
        return [(h, i) for h in range(self.n + 1) for i in range(self.n - h + 1)]

    def boundary_values(self) -> dict[tuple[int, int], int]:
        n = self.n
        smu = _prefix_sums(tuple(self.mu), n)
        snu = _prefix_sums(tuple(self.nu), n)
        sla = _prefix_sums(tuple(self.la), n)
        vals: dict[tuple[int, int], int] = {}
        for h in range(n + 1):
            vals[(h, 0)] = smu[h]
        for i in range(n + 1):
            vals[(n - i, i)] = smu[n] + snu[i]
        for i in range(n + 1):
            vals[(0, i)] = sla[i]
        return vals

    def interior(self) -> list[tuple[int, int]]:
        """Free vertices, row by row from the base upward."""
        return [(h, i)
                for h in range(1, self.n)
                for i in range(1, self.n - h)]

    def rhombus_quadruples(self):
        """Yield (plus, plus, minus, minus) vertex quadruples.

        Each quadruple encodes one concavity condition: the sum of labels
        over the first pair must be >= the sum over the second pair. The
        three orientations of a unit rhombus inside the triangle all
        appear.
        """
        n = self.n
        for h in range(n - 1):
            for i in range(n - h - 1):
                yield ((h, i + 1), (h + 1, i), (h, i), (h + 1, i + 1))
        for h in range(n - 1):
            for i in range(1, n - h):
                yield ((h, i), (h + 1, i), (h, i + 1), (h + 1, i - 1))
        for h in range(1, n):
            for i in range(n - h):
                yield ((h, i), (h, i + 1), (h - 1, i + 1), (h + 1, i))


@dataclass(frozen=True)
class LRHive:
    """A concrete hive labeling: frame plus a value at every vertex."""

    frame: HiveFrame
    labels: dict[tuple[int, int], int]

    def is_valid(self) -> bool:
        vals = self.labels
        want = self.frame.boundary_values()
        if any(vals.get(v) != x for v, x in want.items()):
            return False
        if set(vals) != set(self.frame.vertices()):
            return False
        for a, b, c, d in self.frame.rhombus_quadruples():
            if vals[a] + vals[b] < vals[c] + vals[d]:
                return False
        return True


def _lr_system(frame: HiveFrame) -> tuple[LinearSystem, dict[tuple[int, int], int]]:
    fixed = frame.boundary_values()
    free = frame.interior()
    index = {v: k for k, v in enumerate(free)}
    box_hi = frame.la.weight
    sys = LinearSystem(len(free), box_hi=box_hi)
    for quad in frame.rhombus_quadruples():
        coeffs: dict[int, int] = {}
        const = 0
        for v, sign in zip(quad, (1, 1, -1, -1)):
            if v in index:
                j = index[v]
                coeffs[j] = coeffs.get(j, 0) + sign
            else:
                const += sign * fixed[v]
        sys.add_row(coeffs, const)
    return sys, index


def count_lr(mu, nu, la, n: int | None = None, budget: Budget | None = None) -> int:
    """Littlewood-Richardson coefficient of (mu, nu, la) by hive counting.

    n fixes the frame side; any n at least the longest partition length
    gives the same count. Returns 0 immediately when the weight or length
    conditions already rule every hive out.
    """
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    if la.weight != mu.weight + nu.weight:
        return 0
    if la.length > mu.length + nu.length:
        return 0
    if n is None:
        n = max(mu.length, nu.length, la.length)
    if n == 0:
        return 1
    frame = HiveFrame(n, mu, nu, la)
    sys, _ = _lr_system(frame)
    return sys.count(budget)


def count_lr_auto(mu, nu, la, budget: Budget | None = None) -> int:
    """count_lr with the minimal frame; memoized on the triple."""
    key = (Partition(mu), Partition(nu), Partition(la))
    return _count_lr_cached(key) if budget is None else count_lr(*key, budget=budget)


@functools.lru_cache(maxsize=200000)
def _count_lr_cached(key) -> int:
    mu, nu, la = key
    return count_lr(mu, nu, la)


def iter_lr_hives(mu, nu, la, n: int | None = None,
                  budget: Budget | None = None):
    """Yield every hive as an LRHive. Debug path; counting never builds these."""
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    if la.weight != mu.weight + nu.weight or la.length > mu.length + nu.length:
        return
    if n is None:
        n = max(mu.length, nu.length, la.length)
    frame = HiveFrame(n, mu, nu, la)
    if n == 0:
        yield LRHive(frame, frame.boundary_values())
        return
    sys, index = _lr_system(frame)
    fixed = frame.boundary_values()
    for point in sys.solutions(budget):
        labels = dict(fixed)
        for v, j in index.items():
            labels[v] = point[j]
        yield LRHive(frame, labels)


# --- independent oracle: Schur polynomial arithmetic ---

def _interlacings(row: tuple[int, ...]):
    ranges = [range(row[k + 1], row[k] + 1) for k in range(len(row) - 1)]
    return itertools.product(*ranges)


@functools.lru_cache(maxsize=None)
def _schur_expansion(la: Partition, m: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of the Schur polynomial of la in m variables.

    Built from triangular arrays of weakly interlacing rows; the exponent
    of variable k is the amount row k adds over row k-1. Returns a dict
    from exponent tuples to multiplicities. Callers must not mutate it.
    """
    la = Partition(la)
    if m < la.length:
        return {}
    if m == 0:
        return {(): 1}
    out: dict[tuple[int, ...], int] = {}
    exps = [0] * m

    def descend(row: tuple[int, ...], level: int):
        if level == 1:
            exps[0] = row[0]
            key = tuple(exps)
            out[key] = out.get(key, 0) + 1
            return
        total = sum(row)
        for nxt in _interlacings(row):
            exps[level - 1] = total - sum(nxt)
            descend(nxt, level - 1)

    descend(tuple(padded(la, m)), m)
    return out


def _convolve(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict[tuple[int, ...], int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return out


@functools.lru_cache(maxsize=None)
def schur_expand_product(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Decompose the product of two Schur polynomials into Schur terms.

    Works in enough variables to be faithful, then repeatedly strips the
    lexicographically greatest monomial: for a symmetric polynomial with
    nonnegative coefficients that monomial is always a partition and its
    coefficient is the multiplicity of the matching Schur term.
    """
    mu = Partition(mu)
    nu = Partition(nu)
    m = max(mu.length + nu.length, 1)
    prod = _convolve(_schur_expansion(mu, m), _schur_expansion(nu, m))
    result: dict[Partition, int] = {}
    while prod:
        e = max(prod)
        c = prod[e]
        lam = Partition(e)
        if c <= 0:
            raise AssertionError("leading-term peel went negative; "
                                 "symmetric-function bookkeeping is broken")
        result[lam] = c
        for k, v in _schur_expansion(lam, m).items():
            left = prod.get(k, 0) - c * v
            if left:
                prod[k] = left
            else:
                prod.pop(k, None)
    return result


def schur_coefficient_oracle(mu, nu, la) -> int:
    """Littlewood-Richardson coefficient via symmetric functions. Oracle route.

    Multiplies the monomial expansion of one Schur polynomial against the
    alternant of the other and reads off a single coefficient, so it stays
    cheap even when the full product decomposition would not.
    """
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    if la.weight != mu.weight + nu.weight:
        return 0
    m = max(mu.length + nu.length, la.length, 1)
    # Enumerate tableaux for the smaller factor.
    if _schur_dim_hint(mu, m) > _schur_dim_hint(nu, m):
        mu, nu = nu, mu
    staircase = tuple(range(m - 1, -1, -1))
    target = tuple(x + d for x, d in zip(padded(la, m), staircase))
    want = [x + d for x, d in zip(padded(nu, m), staircase)]
    total = 0
    for exps, mult in _schur_expansion(mu, m).items():
        diff = [t - e for t, e in zip(target, exps)]
        if sorted(diff, reverse=True) != want or len(set(diff)) != m:
            continue
        inversions = sum(1 for i in range(m) for j in range(i + 1, m)
                         if diff[i] < diff[j])
        total += mult if inversions % 2 == 0 else -mult
    return total


def _schur_dim_hint(p: Partition, m: int) -> int:
    """Number of tableaux counted by _schur_expansion (Weyl dimension)."""
    a = [x + d for x, d in zip(padded(p, m), range(m - 1, -1, -1))]
    num = den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= a[i] - a[j]
            den *= j - i
    return num // den
