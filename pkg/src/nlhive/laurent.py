"""Exact sparse Laurent polynomials, optionally with windowed arithmetic.

Terms live in a dict from integer exponent tuples to nonzero integer
coefficients. A window is a predicate on exponent tuples: arithmetic drops
any monomial the predicate rejects and records that a drop happened.
Whether a window is harmless for the coefficient eventually read off is
the caller's obligation; the on_drop hook hands every discarded exponent
tuple to the caller so that soundness can be policed precisely.
"""

from __future__ import annotations

from typing import Callable, Iterator

Exps = tuple[int, ...]
Window = Callable[[Exps], bool]


class LaurentPoly:
    """A Laurent polynomial with exact integer coefficients."""

    __slots__ = ("nvars", "terms", "window", "truncated")

    def __init__(self, nvars: int, terms: dict[Exps, int] | None = None,
                 window: Window | None = None, truncated: bool = False,
                 on_drop: Callable[[Exps], None] | None = None):
        self.nvars = nvars
        self.window = window
        kept: dict[Exps, int] = {}
        dropped = False
        for e, c in (terms or {}).items():
            if not c:
                continue
            if window is not None and not window(e):
                dropped = True
                if on_drop is not None:
                    on_drop(e)
                continue
            kept[e] = c
        self.terms = kept
        self.truncated = truncated or dropped

    @classmethod
    def one(cls, nvars: int, window: Window | None = None) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1}, window)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LaurentPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def items(self) -> Iterator[tuple[Exps, int]]:
        return iter(self.terms.items())

    def add(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(self.nvars, out, self.window,
                           self.truncated or other.truncated)

    def mul_terms(self, factor: dict[Exps, int],
                  on_drop: Callable[[Exps], None] | None = None) -> "LaurentPoly":
        """Multiply by a finite term dict under this poly's window."""
        out: dict[Exps, int] = {}
        for e, c in self.terms.items():
            for f, d in factor.items():
                key = tuple(a + b for a, b in zip(e, f))
                v = out.get(key, 0) + c * d
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return LaurentPoly(self.nvars, out, self.window, self.truncated, on_drop)

    def mul(self, other: "LaurentPoly",
            on_drop: Callable[[Exps], None] | None = None) -> "LaurentPoly":
        res = self.mul_terms(other.terms, on_drop)
        res.truncated = res.truncated or other.truncated
        return res

    def geometric_mul(self, step: Exps,
                      on_drop: Callable[[Exps], None] | None = None,
                      max_power: int = 10 ** 6) -> "LaurentPoly":
        """Multiply by the geometric series 1 + x^step + x^(2 step) + ...

        Requires a window, and the window must kill every ray e + k*step
        eventually; the caller guarantees that by capping some coordinate
        the step increases. Clipping at the window edge is definitional
        here and does not set the truncated flag; judge soundness through
        on_drop.
        """
        if self.window is None:
            raise ValueError("geometric factor requires a window")
        window = self.window
        out: dict[Exps, int] = {}
        for e, c in self.terms.items():
            cur = e
            k = 0
            while True:
                if not window(cur):
                    if on_drop is not None:
                        on_drop(cur)
                    break
                v = out.get(cur, 0) + c
                if v:
                    out[cur] = v
                else:
                    out.pop(cur, None)
                k += 1
                if k > max_power:
                    raise RuntimeError(
                        "geometric expansion ran away; the window does not bound it")
                cur = tuple(a + b for a, b in zip(cur, step))
        res = LaurentPoly(self.nvars, out, None, self.truncated)
        res.window = window
        return res

    def project(self, keep: Callable[[Exps], bool],
                erase: tuple[int, ...]) -> "LaurentPoly":
        """Keep matching monomials, then zero out the listed coordinates."""
        dead = set(erase)
        out: dict[Exps, int] = {}
        for e, c in self.terms.items():
            if not keep(e):
                continue
            key = tuple(0 if j in dead else x for j, x in enumerate(e))
            out[key] = out.get(key, 0) + c
        return LaurentPoly(self.nvars, out, None, self.truncated)
