"""Weyl characters and tensor multiplicities for the classical families.

Characters are built straight from the alternant quotient: both alternants
are assembled over the (signed) permutation group in a doubled exponent
lattice so that half-integer staircases stay integral, the quotient is
extracted by peeling lexicographically maximal terms, and the exponents
are halved at the end. Tensor multiplicities then come from one
coefficient of ch(mu) * ch(nu) * prod_{roots a > 0} (1 - x^(-a)), which is
exact and never needs the full product decomposition.

Ranks are capped low on purpose: this module exists to confirm that
orthogonal and symplectic tensor multiplicities level off at the glued
hive count once the rank reaches the combined row count, not to be a
general-purpose character calculator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .khive_nl import count_nl_hive
from .laurent import Exps, LaurentPoly
from .partition import Partition, padded, stretch

MAX_RANK = 6
FAMILIES = ("A", "B", "C", "D")
_DIVISION_CAP = 2_000_000


def _perm_sign(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class RootSystem:
    """One classical family at a fixed rank, in coordinate (epsilon) form."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        low = 2 if self.family == "D" else 1
        if not low <= self.rank <= MAX_RANK:
            raise ValueError(
                f"rank {self.rank} out of range for family {self.family} "
                f"(supported: {low}..{MAX_RANK})")

    def positive_roots(self) -> list[tuple[int, ...]]:
        r = self.rank
        def vec(*coords):
            e = [0] * r
            for j, v in coords:
                e[j] += v
            return tuple(e)
        roots = [vec((i, 1), (j, -1)) for i in range(r) for j in range(i + 1, r)]
        if self.family != "A":
            roots += [vec((i, 1), (j, 1)) for i in range(r) for j in range(i + 1, r)]
        if self.family == "B":
            roots += [vec((i, 1)) for i in range(r)]
        elif self.family == "C":
            roots += [vec((i, 2)) for i in range(r)]
        return roots

    def rho2(self) -> tuple[int, ...]:
        """The staircase vector doubled, so it is integral in every family."""
        r = self.rank
        if self.family == "A":
            return tuple(2 * (r - 1 - i) for i in range(r))
        if self.family == "B":
            return tuple(2 * (r - i) - 1 for i in range(r))
        if self.family == "C":
            return tuple(2 * (r - i) for i in range(r))
        return tuple(2 * (r - 1 - i) for i in range(r))

    def rho(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, 2) for v in self.rho2())

    def weyl_elements(self):
        """Yield (perm, signs, sign_of_element) triples for the whole group."""
        r = self.rank
        for perm in permutations(range(r)):
            psign = _perm_sign(perm)
            if self.family == "A":
                yield perm, (1,) * r, psign
                continue
            for signs in product((1, -1), repeat=r):
                flips = signs.count(-1)
                if self.family == "D":
                    if flips % 2:
                        continue
                    yield perm, signs, psign
                else:
                    yield perm, signs, psign * (-1 if flips % 2 else 1)

    def order(self) -> int:
        r = self.rank
        fact = 1
        for k in range(2, r + 1):
            fact *= k
        if self.family == "A":
            return fact
        if self.family == "D":
            return fact << (r - 1)
        return fact << r


def _apply(perm, signs, vec) -> tuple[int, ...]:
    return tuple(signs[i] * vec[perm[i]] for i in range(len(vec)))


def _alternant(system: RootSystem, target: tuple[int, ...]) -> dict[Exps, int]:
    out: dict[Exps, int] = {}
    for perm, signs, sgn in system.weyl_elements():
        e = _apply(perm, signs, target)
        v = out.get(e, 0) + sgn
        if v:
            out[e] = v
        else:
            del out[e]
    return out


@dataclass(frozen=True)
class CharacterPoly:
    """An irreducible character as an exact Laurent polynomial."""

    family: str
    rank: int
    highest_weight: Partition
    poly: LaurentPoly

    def dimension(self) -> int:
        return sum(self.poly.terms.values())

    def weight_multiplicity(self, vec) -> int:
        return self.poly.coefficient(tuple(vec))

    def apply_weyl(self, perm, signs) -> LaurentPoly:
        moved = {_apply(perm, signs, e): c for e, c in self.poly.terms.items()}
        return LaurentPoly(self.rank, moved)


@lru_cache(maxsize=None)
def _character_cached(family: str, rank: int, la: tuple[int, ...]) -> CharacterPoly:
    system = RootSystem(family, rank)
    lam = padded(Partition(la), rank)
    rho2 = system.rho2()
    num = _alternant(system, tuple(2 * lam[i] + rho2[i] for i in range(rank)))
    den = _alternant(system, rho2)
    top = max(den)
    if top != rho2 or den[top] != 1:
        raise RuntimeError("staircase alternant has unexpected leading term")
    den_items = sorted(den.items(), reverse=True)
    quotient: dict[Exps, int] = {}
    rem = dict(num)
    steps = 0
    while rem:
        steps += 1
        if steps > _DIVISION_CAP:
            raise RuntimeError("alternant division did not terminate")
        e = max(rem)
        c = rem[e]
        q = tuple(a - b for a, b in zip(e, rho2))
        quotient[q] = c
        for de, dc in den_items:
            key = tuple(a + b for a, b in zip(q, de))
            v = rem.get(key, 0) - c * dc
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    halved: dict[Exps, int] = {}
    for e, c in quotient.items():
        if any(v % 2 for v in e):
            raise RuntimeError("alternant quotient landed off the weight lattice")
        halved[tuple(v // 2 for v in e)] = c
    return CharacterPoly(family, rank, Partition(la), LaurentPoly(rank, halved))


def character(family: str, rank: int, la) -> CharacterPoly:
    """Irreducible character with highest weight la, rank at most MAX_RANK."""
    la = Partition(la)
    if la.length > rank:
        raise ValueError(
            f"highest weight {tuple(la)} has more rows than the rank {rank}")
    return _character_cached(family, rank, tuple(la))


def weyl_dim(family: str, rank: int, la) -> int:
    """Dimension by the product formula; an independent cross-check."""
    system = RootSystem(family, rank)
    lam = padded(Partition(la), rank)
    rho = system.rho()
    top = [lam[i] + rho[i] for i in range(rank)]
    result = Fraction(1)
    for alpha in system.positive_roots():
        result *= Fraction(sum(t * a for t, a in zip(top, alpha)))
        result /= sum(r * a for r, a in zip(rho, alpha))
    if result.denominator != 1:
        raise RuntimeError("dimension product formula gave a non-integer")
    return int(result)


@lru_cache(maxsize=None)
def _delta_support(family: str, rank: int) -> tuple[tuple[Exps, int], ...]:
    """prod_{roots a > 0} (1 - x^(-a)), read off the staircase alternant."""
    system = RootSystem(family, rank)
    rho2 = system.rho2()
    out: dict[Exps, int] = {}
    for e, c in _alternant(system, rho2).items():
        diff = tuple(a - b for a, b in zip(e, rho2))
        if any(v % 2 for v in diff):
            raise RuntimeError("staircase orbit left the root lattice")
        out[tuple(v // 2 for v in diff)] = c
    return tuple(out.items())


def _delta_by_product(family: str, rank: int) -> dict[Exps, int]:
    """Same factor product expanded term by term; only for small-rank tests."""
    poly = LaurentPoly.one(rank)
    for alpha in RootSystem(family, rank).positive_roots():
        poly = poly.mul_terms({(0,) * rank: 1, tuple(-v for v in alpha): -1})
    return dict(poly.terms)


def tensor_multiplicity(family: str, rank: int, mu, nu, la) -> int:
    """Multiplicity of the la-irreducible inside the mu x nu tensor square."""
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    for part in (mu, nu, la):
        if part.length > rank:
            raise ValueError(
                f"partition {tuple(part)} has more rows than the rank {rank}")
    chmu = character(family, rank, mu).poly
    chnu = character(family, rank, nu).poly
    if len(chnu) < len(chmu):
        chmu, chnu = chnu, chmu
    lam = padded(la, rank)
    total = 0
    for d, cd in _delta_support(family, rank):
        v = tuple(a - b for a, b in zip(lam, d))
        point = 0
        for e, ce in chmu.terms.items():
            cf = chnu.terms.get(tuple(a - b for a, b in zip(v, e)))
            if cf:
                point += ce * cf
        total += cd * point
    return total


def verify_stabilization(mu, nu, la, t_max: int = 2) -> dict:
    """Compare tensor multiplicities against glued-hive counts over a rank sweep.

    Ranks from the largest row count of the inputs up to one past the
    stabilization threshold (combined row count of the first two inputs),
    truncated at MAX_RANK. At and beyond the threshold a disagreement in
    any family raises; below it the values are only reported, since the
    families genuinely differ there.
    """
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    threshold = mu.length + nu.length
    start = max(mu.length, nu.length, la.length, 2)
    stop = min(threshold + 1, MAX_RANK)
    if start > stop:
        raise ValueError(
            f"no usable ranks: inputs need rank >= {start} but the sweep is "
            f"capped at {stop}")
    nl = [count_nl_hive(stretch(mu, t), stretch(nu, t), stretch(la, t))
          for t in range(1, t_max + 1)]
    report = {"mu": tuple(mu), "nu": tuple(nu), "la": tuple(la),
              "t_max": t_max, "threshold": threshold, "nl": nl, "ranks": []}
    for rank in range(start, stop + 1):
        row = {"rank": rank, "at_threshold": rank >= threshold, "families": {}}
        for family in ("B", "C", "D"):
            vals = [tensor_multiplicity(family, rank,
                                        stretch(mu, t), stretch(nu, t), stretch(la, t))
                    for t in range(1, t_max + 1)]
            row["families"][family] = vals
            if rank >= threshold and vals != nl:
                raise RuntimeError(
                    f"family {family} at rank {rank} gives {vals}, but the "
                    f"glued-hive count is {nl}; stabilization failed")
        report["ranks"].append(row)
    return report
