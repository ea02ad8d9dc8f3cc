"""Stretched sequences, exact quasi-polynomial fits, and generating functions.

The dilation sequence of a triple is integer-valued and quasi-polynomial
with quasi-period at most two, so the whole pipeline here is exact: fit
the even- and odd-index subsequences separately by rational interpolation,
insist every held-out sample matches, rebuild the canonical rational
generating function, and re-expand to prove the round trip. Nothing is
approximate; any mismatch raises rather than degrades.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ._hivecore import Budget, BudgetExceededError
from .ctgf_oracle import nl_constant_term
from .khive_nl import count_nl_hive, count_nl_lrsum
from .partition import Partition, render, stretch, triple_parity


class QuasiFitError(ValueError):
    """The sequence is not quasi-polynomial of period 2 within the bound."""


def _poly_eval(coeffs: tuple[Fraction, ...], t: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _poly_text(coeffs: tuple[Fraction, ...]) -> str:
    if not coeffs:
        return "0"
    den = math.lcm(*(c.denominator for c in coeffs))
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k] * den
        if c == 0:
            continue
        mag = abs(int(c))
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{k}")
        parts.append(("-" if c < 0 else "+") + body)
    text = "".join(parts).lstrip("+")
    if den == 1:
        return text
    return f"({text})/{den}"


@dataclass(frozen=True)
class QuasiPolynomial2:
    """A period-2 quasi-polynomial: one branch for even t, one for odd t.

    Coefficients are exact rationals in ascending degree with no trailing
    zeros, so the zero branch is the empty tuple.
    """

    p_even: tuple[Fraction, ...]
    p_odd: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        """Largest branch degree; -1 when both branches are zero."""
        return max(len(self.p_even), len(self.p_odd)) - 1

    def branch(self, t: int) -> tuple[Fraction, ...]:
        return self.p_even if t % 2 == 0 else self.p_odd

    def evaluate(self, t: int) -> Fraction:
        return _poly_eval(self.branch(t), t)

    def value(self, t: int) -> int:
        v = self.evaluate(t)
        if v.denominator != 1:
            raise ValueError(f"quasi-polynomial is not integer-valued at t={t}: {v}")
        return int(v)

    def is_zero(self) -> bool:
        return not self.p_even and not self.p_odd

    def render(self) -> str:
        return f"even: {_poly_text(self.p_even)}; odd: {_poly_text(self.p_odd)}"

    def to_json(self) -> dict:
        return {"even": [str(c) for c in self.p_even],
                "odd": [str(c) for c in self.p_odd]}


@dataclass(frozen=True)
class RationalGF:
    """G(w) / ((1-w)^d1 (1-w^2)^d2) with integer numerator coefficients.

    Values produced by to_generating_function are canonical (numerator
    shares no root with either denominator factor); hand-built instances
    may be non-canonical, and equivalent() compares regardless of form.
    """

    numerator: tuple[int, ...]
    d1: int
    d2: int

    def is_zero(self) -> bool:
        return not any(self.numerator)

    def _den_coefficient(self, rem: int) -> int:
        """Series coefficient of w^rem in 1/((1-w)^d1 (1-w^2)^d2)."""
        if self.d1 == 0 and self.d2 == 0:
            return 1 if rem == 0 else 0
        if self.d2 == 0:
            return math.comb(rem + self.d1 - 1, self.d1 - 1)
        if self.d1 == 0:
            if rem % 2:
                return 0
            return math.comb(rem // 2 + self.d2 - 1, self.d2 - 1)
        total = 0
        for j in range(rem // 2 + 1):
            total += (math.comb(rem - 2 * j + self.d1 - 1, self.d1 - 1)
                      * math.comb(j + self.d2 - 1, self.d2 - 1))
        return total

    def expand(self, t_max: int) -> list[int]:
        """Exact power-series coefficients for w^0 .. w^t_max."""
        if t_max < 0:
            raise ValueError("t_max must be nonnegative")
        out = [0] * (t_max + 1)
        for m, g in enumerate(self.numerator):
            if g == 0 or m > t_max:
                continue
            for k in range(m, t_max + 1):
                out[k] += g * self._den_coefficient(k - m)
        return out

    def equivalent(self, other: "RationalGF") -> bool:
        """Equality as rational functions, by cross-multiplication."""
        left = _poly_mul_den(self.numerator, other.d1, other.d2)
        right = _poly_mul_den(other.numerator, self.d1, self.d2)
        return left == right

    def render(self) -> str:
        num = _int_poly_text(self.numerator)
        dens = []
        if self.d1:
            dens.append("(1-w)" + (f"^{self.d1}" if self.d1 > 1 else ""))
        if self.d2:
            dens.append("(1-w^2)" + (f"^{self.d2}" if self.d2 > 1 else ""))
        if not dens:
            return num
        den = "".join(dens)
        if len(dens) > 1:
            den = f"({den})"
        if sum(1 for c in self.numerator if c) > 1:
            num = f"({num})"
        return f"{num}/{den}"

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator), "d1": self.d1, "d2": self.d2}


def _int_poly_text(coeffs: tuple[int, ...]) -> str:
    if not any(coeffs):
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + ("w" if k == 1 else f"w^{k}")
        parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts).lstrip("+")


def _poly_mul_den(num: tuple[int, ...], d1: int, d2: int) -> tuple[int, ...]:
    """num * (1-w)^d1 * (1-w^2)^d2 as a coefficient tuple, trimmed."""
    out = list(num)
    for _ in range(d1):
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i] += c
            nxt[i + 1] -= c
        out = nxt
    for _ in range(d2):
        nxt = [0] * (len(out) + 2)
        for i, c in enumerate(out):
            nxt[i] += c
            nxt[i + 2] -= c
        out = nxt
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _interpolate(points: list[tuple[int, Fraction]]) -> tuple[Fraction, ...]:
    """Newton interpolation through the given (t, value) nodes, as
    ascending standard coefficients with trailing zeros trimmed."""
    xs = [Fraction(t) for t, _ in points]
    table = [Fraction(v) for _, v in points]
    order = len(points)
    divided = [table[0]]
    for level in range(1, order):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i])
                 for i in range(order - level)]
        divided.append(table[0])
    coeffs = [Fraction(0)] * order
    basis = [Fraction(1)] + [Fraction(0)] * (order - 1)
    deg = 0
    for level in range(order):
        for k in range(deg + 1):
            coeffs[k] += divided[level] * basis[k]
        if level + 1 < order:
            shifted = [Fraction(0)] * order
            for k in range(deg + 1):
                shifted[k + 1] += basis[k]
                shifted[k] -= xs[level] * basis[k]
            basis = shifted
            deg += 1
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def fit_quasi_polynomial(seq, degree_bound: int) -> QuasiPolynomial2:
    """Exact period-2 fit of seq (indexed from t = 0) within degree_bound.

    Each parity class is interpolated through its first degree_bound + 1
    samples; every remaining sample of the class is then checked exactly,
    and at least one such holdout must exist per class. Any mismatch means
    the data is not quasi-polynomial of period 2 at this degree.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    values = [int(v) for v in seq]
    branches = []
    for parity in (0, 1):
        pts = [(t, Fraction(v)) for t, v in enumerate(values) if t % 2 == parity]
        if len(pts) < degree_bound + 2:
            raise ValueError(
                f"need at least {degree_bound + 2} samples of parity {parity} "
                f"(one beyond the interpolation order), got {len(pts)}")
        head = pts[:degree_bound + 1]
        coeffs = _interpolate(head)
        for t, v in pts[degree_bound + 1:]:
            if _poly_eval(coeffs, t) != v:
                raise QuasiFitError(
                    "not quasi-period-2 within degree bound: holdout at "
                    f"t={t} expected {v}, polynomial gives {_poly_eval(coeffs, t)}")
        branches.append(coeffs)
    return QuasiPolynomial2(branches[0], branches[1])


def to_generating_function(qp: QuasiPolynomial2) -> RationalGF:
    """Canonical rational form of the series sum_t qp(t) w^t.

    The series times (1-w^2)^D is a polynomial when D exceeds both branch
    degrees; peeling every root at w = 1 and w = -1 from that polynomial
    leaves the lowest-terms numerator, and the leftover pole orders give
    the exponents (the order at w = 1 always dominates).
    """
    if qp.is_zero():
        return RationalGF((0,), 0, 0)
    cap = 1 + qp.degree
    series = [qp.value(k) for k in range(2 * cap)]
    h = []
    for k in range(2 * cap):
        acc = 0
        for j in range(cap + 1):
            if k - 2 * j < 0:
                break
            acc += (-1) ** j * math.comb(cap, j) * series[k - 2 * j]
        h.append(acc)
    while h and h[-1] == 0:
        h.pop()
    if not h:
        raise RuntimeError("nonzero quasi-polynomial produced an empty numerator")
    ones = 0
    while sum(h) == 0:
        acc = 0
        pref = []
        for c in h:
            acc += c
            pref.append(acc)
        pref.pop()
        h = pref
        ones += 1
    alts = 0
    while sum(c * (-1) ** k for k, c in enumerate(h)) == 0:
        quot = []
        prev = 0
        for c in h:
            prev = c - prev
            quot.append(prev)
        quot.pop()
        h = quot
        alts += 1
    pole_one = cap - ones
    pole_neg = cap - alts
    if pole_one < pole_neg or pole_neg < 0:
        raise RuntimeError(
            f"pole orders came out as {pole_one} at w=1 and {pole_neg} at w=-1, "
            "which the period-2 structure forbids")
    d2 = pole_neg
    d1 = pole_one - pole_neg
    gf = RationalGF(tuple(h), d1, d2)
    if len(h) - 1 >= d1 + 2 * d2:
        raise RuntimeError("numerator degree reached the denominator degree")
    return gf


def expand_gf(gf: RationalGF, t_max: int) -> list[int]:
    """Series coefficients of gf for t = 0..t_max."""
    return gf.expand(t_max)


_METHODS = {
    "hive": lambda mu, nu, la, budget: count_nl_hive(mu, nu, la, budget=budget),
    "lrsum": lambda mu, nu, la, budget: count_nl_lrsum(mu, nu, la, budget=budget),
    "ct": lambda mu, nu, la, budget: nl_constant_term(mu, nu, la),
}


class _TripleCache:
    """One JSON file of t -> count per triple, written atomically."""

    def __init__(self, cache_dir, mu: Partition, nu: Partition, la: Partition):
        key = f"{render(mu)}|{render(nu)}|{render(la)}"
        digest = hashlib.sha256(key.encode()).hexdigest()[:20]
        self.path = Path(cache_dir) / f"triple-{digest}.json"
        self.key = key
        self.counts: dict[int, int] = {}
        try:
            data = json.loads(self.path.read_text())
            if data.get("triple") == key:
                self.counts = {int(t): int(v) for t, v in data["counts"].items()}
        except (OSError, ValueError, KeyError):
            self.counts = {}

    def save(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.dumps({"triple": self.key,
                              "counts": {str(t): v for t, v in
                                         sorted(self.counts.items())}})
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, self.path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise


def stretched_sequence(mu, nu, la, t_max: int, budget: Budget | None = None,
                       cache_dir=None, method: str = "hive") -> list[int]:
    """Counts of the dilated triple for t = 0..t_max (entry 0 is always 1).

    A budget overrun raises with the completed prefix attached as the
    exception's partial field; a partial sequence is never returned as if
    it were complete.
    """
    if t_max < 0:
        raise ValueError("t_max must be nonnegative")
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {sorted(_METHODS)}")
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    count = _METHODS[method]
    cache = _TripleCache(cache_dir, mu, nu, la) if cache_dir else None
    out: list[int] = []
    dirty = False
    try:
        for t in range(t_max + 1):
            if cache and t in cache.counts:
                out.append(cache.counts[t])
                continue
            v = count(stretch(mu, t), stretch(nu, t), stretch(la, t), budget)
            out.append(v)
            if cache:
                cache.counts[t] = v
                dirty = True
    except BudgetExceededError as err:
        if cache and dirty:
            cache.save()
        err.partial = list(out)
        raise
    if cache and dirty:
        cache.save()
    return out


def default_degree_bound(mu, nu, la) -> int:
    """3n(n-1)/2 for n the largest row count among the three partitions."""
    n = max(Partition(mu).length, Partition(nu).length, Partition(la).length)
    return 3 * n * (n - 1) // 2


@dataclass(frozen=True)
class ItemVerdict:
    name: str
    status: str  # "pass" | "violated" | "premise-not-met" | "skipped"
    detail: str = ""
    witness: tuple | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


@dataclass(frozen=True)
class ConjectureReport:
    mu: Partition
    nu: Partition
    la: Partition
    parity: str
    t_max: int
    degree_bound: int
    sequence: tuple[int, ...]
    fit: QuasiPolynomial2
    gf: RationalGF
    items: tuple[ItemVerdict, ...]

    def ok(self) -> bool:
        return all(item.status != "violated" for item in self.items)

    def to_json(self) -> dict:
        return {
            "triple": {"mu": list(self.mu), "nu": list(self.nu), "la": list(self.la)},
            "parity": self.parity,
            "t_max": self.t_max,
            "degree_bound": self.degree_bound,
            "sequence": list(self.sequence),
            "p_even": self.fit.to_json()["even"],
            "p_odd": self.fit.to_json()["odd"],
            "gf": self.gf.to_json(),
            "report": [item.to_json() for item in self.items],
        }

    def render(self) -> str:
        lines = [
            f"triple: {render(self.mu)} | {render(self.nu)} | {render(self.la)}"
            f"  (total weight {self.parity})",
            f"sequence (t<={self.t_max}): {', '.join(map(str, self.sequence))}",
            f"fit {self.fit.render()}",
            f"gf  {self.gf.render()}",
        ]
        for item in self.items:
            mark = {"pass": "ok", "violated": "VIOLATED",
                    "premise-not-met": "premise not met",
                    "skipped": "skipped"}[item.status]
            line = f"  {item.name}: {mark}"
            if item.detail:
                line += f" ({item.detail})"
            lines.append(line)
        return "\n".join(lines)


def _all_equal_value(seq, start, step, want) -> tuple[bool, tuple | None]:
    for t in range(start, len(seq), step):
        if seq[t] != want:
            return False, (t, seq[t])
    return True, None


def check_conjectures(mu, nu, la, t_max: int | None = None,
                      degree_bound: int | None = None,
                      budget: Budget | None = None, cache_dir=None,
                      method: str = "hive") -> ConjectureReport:
    """Test the saturation, positivity, and structure claims on one triple.

    Every verdict is relative to the computed window t <= t_max; "pass"
    means no counterexample exists in that window and structural claims
    (fit degree, generating-function shape) hold exactly.
    """
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    bound = default_degree_bound(mu, nu, la) if degree_bound is None else degree_bound
    need = 2 * bound + 6
    if t_max is None:
        t_max = need
    if t_max < need:
        raise ValueError(
            f"t_max={t_max} is too small for degree bound {bound}; "
            f"need at least {need}")
    seq = stretched_sequence(mu, nu, la, t_max, budget=budget,
                             cache_dir=cache_dir, method=method)
    parity = triple_parity(mu, nu, la)
    fit = fit_quasi_polynomial(seq, bound)
    gf = to_generating_function(fit)
    items: list[ItemVerdict] = []

    def add(name, status, detail="", witness=None):
        items.append(ItemVerdict(name, status, detail, witness))

    even_w = (not fit.p_even) or all(c >= 0 for c in fit.p_even)
    odd_w = (not fit.p_odd) or all(c >= 0 for c in fit.p_odd)
    g_ok = all(c >= 0 for c in gf.numerator)
    g_even = all(c == 0 for k, c in enumerate(gf.numerator) if k % 2 == 1)

    if parity == "even":
        n1 = seq[1] if t_max >= 1 else None
        if n1 is not None and n1 > 0:
            ok, wit = True, None
            for t in range(1, t_max + 1):
                if seq[t] <= 0:
                    ok, wit = False, (t, seq[t])
                    break
            add("saturation", "pass" if ok else "violated",
                "n(1) > 0 and every later count is positive" if ok else
                "n(1) > 0 but a later count vanishes", wit)
        elif n1 == 0:
            ok, wit = _all_equal_value(seq, 1, 1, 0)
            add("saturation", "pass" if ok else "violated",
                "n(1) = 0 and every later count vanishes" if ok else
                "n(1) = 0 but a later count is positive", wit)
        if seq[1] == 1 and t_max >= 2 and seq[2] == 1:
            ok, wit = _all_equal_value(seq, 1, 1, 1)
            add("multiplicity-one", "pass" if ok else "violated",
                "n(1) = n(2) = 1 propagates" if ok else
                "n(1) = n(2) = 1 yet a later count differs", wit)
        elif seq[1] == 1:
            add("multiplicity-one", "premise-not-met",
                f"n(1) = 1 but n(2) = {seq[2]}, so the hypothesis needs both")
        else:
            add("multiplicity-one", "skipped", f"n(1) = {seq[1]}")
        add("quasi-period-two", "pass",
            f"exact fit at degree <= {bound} with all holdouts matching")
        add("branch-nonnegativity", "pass" if (even_w and odd_w) else "violated",
            "all fitted coefficients are nonnegative" if (even_w and odd_w) else
            f"fit has a negative coefficient: {fit.render()}")
        add("numerator-nonnegativity", "pass" if g_ok else "violated",
            "integer numerator with nonnegative coefficients" if g_ok else
            f"numerator {gf.numerator} has a negative coefficient")
    else:
        ok, wit = _all_equal_value(seq, 1, 2, 0)
        add("odd-vanishing", "pass" if ok else "violated",
            "all odd-index counts vanish" if ok else
            "an odd-index count is nonzero", wit)
        n2 = seq[2] if t_max >= 2 else None
        if n2 is not None and n2 > 0:
            ok, wit = True, None
            for t in range(2, t_max + 1, 2):
                if seq[t] <= 0:
                    ok, wit = False, (t, seq[t])
                    break
            add("even-saturation", "pass" if ok else "violated",
                "n(2) > 0 and every later even count is positive" if ok else
                "n(2) > 0 but a later even count vanishes", wit)
        elif n2 == 0:
            ok, wit = _all_equal_value(seq, 2, 2, 0)
            add("even-saturation", "pass" if ok else "violated",
                "n(2) = 0 and every later even count vanishes" if ok else
                "n(2) = 0 but a later even count is positive", wit)
        if n2 == 1:
            ok, wit = _all_equal_value(seq, 2, 2, 1)
            add("even-multiplicity-one", "pass" if ok else "violated",
                "n(2) = 1 propagates to every even t" if ok else
                "n(2) = 1 yet a later even count differs", wit)
        else:
            add("even-multiplicity-one", "skipped", f"n(2) = {n2}")
        struct_ok = (not fit.p_odd) and gf.d1 == 0 and g_even
        add("even-structure", "pass" if struct_ok else "violated",
            "odd branch is zero, no simple pole factor, numerator even in w"
            if struct_ok else
            f"expected odd-branch 0 / d1 = 0 / even numerator, got odd branch "
            f"{_poly_text(fit.p_odd)}, d1 = {gf.d1}, numerator {gf.numerator}")
        add("even-branch-nonnegativity", "pass" if even_w else "violated",
            "all even-branch coefficients are nonnegative" if even_w else
            f"even branch has a negative coefficient: {_poly_text(fit.p_even)}")
        add("numerator-nonnegativity", "pass" if (g_ok and g_even and gf.d1 == 0)
            else "violated",
            "nonnegative integer numerator, even in w, with d1 = 0"
            if (g_ok and g_even and gf.d1 == 0) else
            f"numerator {gf.numerator} with d1 = {gf.d1}")

    roundtrip = gf.expand(t_max)
    if roundtrip != list(seq):
        raise RuntimeError(
            "generating-function round trip failed; fit or reconstruction is buggy")
    return ConjectureReport(mu, nu, la, parity, t_max, bound, tuple(seq),
                            fit, gf, tuple(items))


@dataclass(frozen=True)
class StabilityConfig:
    """One stabilization scan: a family of triples indexed by a."""

    mode: str  # "first-part-increment" | "prepend" | "equal-weight-head"
    mu: tuple
    nu: tuple
    la: tuple
    a_start: int
    a_stop: int  # inclusive
    t_max: int = 9
    degree_bound: int | None = None


def _scan_triple(mode: str, base: Partition, a: int) -> Partition | None:
    """The a-th member of the scan family, or None when a is out of range."""
    parts = tuple(base)
    if mode == "first-part-increment":
        if not parts:
            return Partition((a,)) if a > 0 else Partition()
        return Partition((parts[0] + a,) + parts[1:])
    if mode == "prepend":
        if parts and a < parts[0]:
            return None
        return Partition((a,) + parts) if a > 0 else (Partition(parts) if not parts
                                                      else None)
    if mode == "equal-weight-head":
        head = a - sum(parts)
        if head < (parts[0] if parts else 0):
            return None
        return Partition((head,) + parts) if head > 0 else Partition(parts)
    raise ValueError(f"unknown scan mode {mode!r}")


def stability_scan(config: StabilityConfig, budget: Budget | None = None,
                   cache_dir=None) -> dict:
    """Fit every member of the scan family and detect where the
    generating function stops changing, per parity class of a.

    The onset for a class is the smallest member whose generating function
    every later member of the class reproduces (as a rational-function
    identity). An onset confirmed by at least one later member is marked
    witnessed; an onset that is merely the last member of its class is
    reported but unwitnessed. A scan of fewer than two values cannot
    stabilize at all.
    """
    if config.a_stop < config.a_start:
        raise ValueError("empty a-range")
    mu = Partition(config.mu)
    nu = Partition(config.nu)
    la = Partition(config.la)
    rows = []
    for a in range(config.a_start, config.a_stop + 1):
        triple = tuple(_scan_triple(config.mode, p, a) for p in (mu, nu, la))
        if any(p is None for p in triple):
            rows.append({"a": a, "skipped":
                         "head smaller than the next part at this a"})
            continue
        m, n_, l_ = triple
        bound = (config.degree_bound if config.degree_bound is not None
                 else default_degree_bound(m, n_, l_))
        seq = stretched_sequence(m, n_, l_, config.t_max, budget=budget,
                                 cache_dir=cache_dir)
        fit = fit_quasi_polynomial(seq, bound)
        gf = to_generating_function(fit)
        rows.append({"a": a, "mu": tuple(m), "nu": tuple(n_), "la": tuple(l_),
                     "sequence": seq, "fit": fit, "gf": gf})
    onsets = {}
    for parity in (0, 1):
        members = [row for row in rows
                   if row["a"] % 2 == parity and "gf" in row]
        label = "even" if parity == 0 else "odd"
        if len([r for r in rows if "gf" in r]) < 2 or not members:
            onsets[label] = {"onset": None, "witnessed": False,
                             "note": "not stabilized in range"}
            continue
        onset = None
        for idx, row in enumerate(members):
            if all(later["gf"].equivalent(row["gf"]) for later in members[idx + 1:]):
                onset = row
                witnessed = idx + 1 < len(members)
                break
        if onset is None:
            onsets[label] = {"onset": None, "witnessed": False,
                             "note": "not stabilized in range"}
        else:
            onsets[label] = {"onset": onset["a"], "witnessed": witnessed,
                             "gf": onset["gf"]}
    return {"mode": config.mode, "t_max": config.t_max,
            "base": {"mu": tuple(mu), "nu": tuple(nu), "la": tuple(la)},
            "rows": rows, "onsets": onsets}
