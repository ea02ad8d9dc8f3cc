"""Constant-term oracle for the glued-hive coefficient.

The coefficient is read off as one coefficient of a product of geometric
and finite factors in three variable groups x, y, z. The expansion
eliminates y first (only the y-exponent mu survives, and after the finite
y factors are in place every remaining factor raises y-degrees, so capping
each y variable at its target part is provably lossless), then z the same
way, and finally multiplies the two finite all-x factor families and reads
one x coefficient. Entirely independent of hive counting and of Schur
arithmetic: this is the from-first-principles cross-check for small cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._hivecore import BudgetExceededError
from .laurent import Exps, LaurentPoly
from .partition import Partition, padded, stretch

DEFAULT_MAX_TERMS = 2_000_000


class TruncationError(RuntimeError):
    """A window was too small for soundness; no answer can be reported."""


@dataclass(frozen=True)
class FactorSet:
    """The factors of the constant-term product for sizes (p, q, r).

    Exponent tuples run over x_1..x_r, y_1..y_p, z_1..z_q in that order.
    Geometric entries are pairs of step vectors, each standing for the
    series 1/(1 - monomial); finite entries are explicit term dicts.
    """

    p: int
    q: int
    r: int
    k_xy: tuple[tuple[Exps, Exps], ...]
    k_xz: tuple[tuple[Exps, Exps], ...]
    a_y: tuple[dict[Exps, int], ...]
    a_z: tuple[dict[Exps, int], ...]
    c_xbar: tuple[dict[Exps, int], ...]
    v_x: tuple[dict[Exps, int], ...]
    v_y: tuple[dict[Exps, int], ...]
    v_z: tuple[dict[Exps, int], ...]


def _unit(nvars: int, *coords: tuple[int, int]) -> Exps:
    e = [0] * nvars
    for j, v in coords:
        e[j] += v
    return tuple(e)


def build_factors(p: int, q: int, r: int) -> FactorSet:
    """Factor inventory for group sizes (p, q, r); requires r = p + q."""
    if r != p + q:
        raise ValueError("x-group size must be the sum of the y- and z-group sizes")
    n = r + p + q
    zero = (0,) * n

    def x(i):
        return i

    def y(a):
        return r + a

    def z(b):
        return r + p + b

    k_xy = tuple(
        (_unit(n, (x(i), 1), (y(a), 1)), _unit(n, (x(i), -1), (y(a), 1)))
        for a in range(p) for i in range(r))
    k_xz = tuple(
        (_unit(n, (x(i), 1), (z(b), 1)), _unit(n, (x(i), -1), (z(b), 1)))
        for b in range(q) for i in range(r))
    a_y = tuple({zero: 1, _unit(n, (y(a), 1), (y(b), 1)): -1}
                for a in range(p) for b in range(a + 1, p))
    a_z = tuple({zero: 1, _unit(n, (z(a), 1), (z(b), 1)): -1}
                for a in range(q) for b in range(a + 1, q))
    c_xbar = tuple({zero: 1, _unit(n, (x(i), -1), (x(j), -1)): -1}
                   for i in range(r) for j in range(i, r))
    v_x = tuple({zero: 1, _unit(n, (x(i), -1), (x(j), 1)): -1}
                for i in range(r) for j in range(i + 1, r))
    v_y = tuple({zero: 1, _unit(n, (y(a), -1), (y(b), 1)): -1}
                for a in range(p) for b in range(a + 1, p))
    v_z = tuple({zero: 1, _unit(n, (z(a), -1), (z(b), 1)): -1}
                for a in range(q) for b in range(a + 1, q))
    return FactorSet(p, q, r, k_xy, k_xz, a_y, a_z, c_xbar, v_x, v_y, v_z)


@dataclass
class _Guard:
    """Tracks drops that a full-size window would have kept."""

    sound: object
    unsound: bool = False
    max_terms: int = DEFAULT_MAX_TERMS
    stages: list = field(default_factory=list)

    def on_drop(self, exps: Exps) -> None:
        if self.sound(exps):
            self.unsound = True

    def check_size(self, poly: LaurentPoly, label: str) -> None:
        self.stages.append((label, len(poly)))
        if len(poly) > self.max_terms:
            raise BudgetExceededError(
                f"term budget exceeded at stage {label}: "
                f"{len(poly)} > {self.max_terms}")


def _eliminate_group(poly: LaurentPoly, target: tuple[int, ...],
                     offset: int, width: int, finite_factors, geometric,
                     guard: _Guard, cap_total: int | None, label: str) -> LaurentPoly:
    """Fold in one auxiliary group's factors and extract its target exponent.

    finite_factors may move the group's exponents both ways and are applied
    exactly. geometric factors only raise them, so a per-variable ceiling at
    the target (plus an optional total ceiling) loses nothing; afterwards
    the group is pinned to the target and erased.
    """
    for f in finite_factors:
        poly = poly.mul_terms(f)
        guard.check_size(poly, f"{label}-finite")
    caps = target
    total_sound = sum(target)
    total_used = total_sound if cap_total is None else min(cap_total, total_sound)

    def window(e: Exps) -> bool:
        block = e[offset:offset + width]
        if any(v > c for v, c in zip(block, caps)):
            return False
        return sum(block) <= total_used

    def sound(e: Exps) -> bool:
        block = e[offset:offset + width]
        return all(v <= c for v, c in zip(block, caps)) and sum(block) <= total_sound

    guard.sound = sound
    poly = LaurentPoly(poly.nvars, poly.terms, window, poly.truncated, guard.on_drop)
    # factors touching the same group variable sit together, so the group
    # variable can be pinned to its target the moment its factors are done
    per_var = len(geometric) // width if width else 0
    for a in range(width):
        for pair in geometric[a * per_var:(a + 1) * per_var]:
            for step in pair:
                poly = poly.geometric_mul(step, guard.on_drop)
            guard.check_size(poly, f"{label}-geom")
        j = offset + a
        want = caps[a]
        poly = LaurentPoly(
            poly.nvars,
            {e: c for e, c in poly.terms.items() if e[j] == want},
            window, poly.truncated)
    poly.window = None
    return poly.project(lambda e: True, tuple(range(offset, offset + width)))


def nl_constant_term(mu, nu, la, max_terms: int = DEFAULT_MAX_TERMS,
                     y_cap: int | None = None, z_cap: int | None = None,
                     stats_out: list | None = None) -> int:
    """The glued-hive coefficient of (mu, nu, la) by coefficient extraction.

    y_cap and z_cap deliberately shrink the expansion windows below their
    provably lossless sizes; they exist so tests can exercise the refusal
    path. A run whose shrunken window discarded anything a full window
    would have kept raises TruncationError rather than returning a number.
    """
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    p, q = mu.length, nu.length
    r = p + q
    if la.length > r:
        raise ValueError("third partition is longer than the other two combined")
    if r == 0:
        return 1
    fac = build_factors(p, q, r)
    n = r + p + q
    guard = _Guard(sound=lambda e: True, max_terms=max_terms)
    poly = LaurentPoly.one(n)
    poly = _eliminate_group(poly, tuple(mu), r, p,
                            list(fac.v_y) + list(fac.a_y), fac.k_xy,
                            guard, y_cap, "y")
    poly = _eliminate_group(poly, tuple(nu), r + p, q,
                            list(fac.v_z) + list(fac.a_z), fac.k_xz,
                            guard, z_cap, "z")
    for f in list(fac.c_xbar) + list(fac.v_x):
        poly = poly.mul_terms(f)
        guard.check_size(poly, "x-finite")
    if guard.unsound:
        raise TruncationError(
            "shrunken expansion window discarded contributing terms; "
            "no verdict is possible at this window size")
    if stats_out is not None:
        stats_out.extend(guard.stages)
    return poly.coefficient(tuple(padded(la, r)) + (0,) * (p + q))


def nl_gf_truncated(mu, nu, la, t_max: int,
                    max_terms: int = DEFAULT_MAX_TERMS) -> list[int]:
    """Stretched coefficients for t = 0..t_max, one extraction per t."""
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    out = []
    for t in range(t_max + 1):
        out.append(nl_constant_term(stretch(mu, t), stretch(nu, t), stretch(la, t),
                                    max_terms=max_terms))
    return out
