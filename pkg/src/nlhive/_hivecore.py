"""Depth-first integer-point counting for small linear inequality systems.

Both hive counters reduce to the same kernel problem: count the integer
vectors x in Z^m that satisfy a global box together with rows of the form

    sum_j c_j * x_j + const >= 0.

Every row is attached to the variable of largest sweep index it mentions,
so the moment the sweep reaches that variable the row collapses to a lower
or upper bound on it. The final variable of the sweep is never looped over:
its feasible interval is counted in closed form.

Rows that mention no variable at all act as preconditions; if any fails the
count is zero without any search.
"""

from __future__ import annotations

import time
from typing import Iterator

DEFAULT_NODE_BUDGET = 10**9
DEFAULT_TIME_BUDGET = 600.0

_CHECK_BLOCK = 4096


class BudgetExceededError(RuntimeError):
    """An enumeration ran past its node or time allowance.

    The exception carries the resources spent so far and, when the caller
    has one, the partial result computed before the limit hit. The partial
    value is diagnostic only and is never returned as an answer.
    """

    def __init__(self, message: str, nodes: int | None = None,
                 seconds: float | None = None, partial=None):
        super().__init__(message)
        self.nodes = nodes
        self.seconds = seconds
        self.partial = partial


class Budget:
    """Node and wall-clock allowance shared across one logical computation."""

    __slots__ = ("max_nodes", "max_seconds", "nodes", "_t0")

    def __init__(self, max_nodes: int = DEFAULT_NODE_BUDGET,
                 max_seconds: float = DEFAULT_TIME_BUDGET):
        if max_nodes <= 0:
            raise ValueError("node budget must be positive")
        if max_seconds <= 0:
            raise ValueError("time budget must be positive")
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds
        self.nodes = 0
        self._t0 = time.monotonic()

    def elapsed(self) -> float:
        return time.monotonic() - self._t0

    def charge(self, n: int) -> None:
        """Record n more enumeration nodes, raising once a limit is passed."""
        self.nodes += n
        if self.nodes > self.max_nodes:
            raise BudgetExceededError(
                f"enumeration exceeded the node budget of {self.max_nodes}",
                nodes=self.nodes, seconds=self.elapsed())
        sec = self.elapsed()
        if sec > self.max_seconds:
            raise BudgetExceededError(
                f"enumeration exceeded the time budget of {self.max_seconds:g}s",
                nodes=self.nodes, seconds=sec)


class LinearSystem:
    """A box plus ''linear combination + const >= 0'' rows over m variables.

    Variables are indexed 0..nvars-1 in sweep order; the caller is
    responsible for choosing an order in which early bounds prune well.
    """

    def __init__(self, nvars: int, box_hi: int, box_lo: int = 0):
        self.nvars = nvars
        self.box_lo = box_lo
        self.box_hi = box_hi
        self._rows: list[tuple[dict[int, int], int]] = []
        self._compiled = None

    def add_row(self, coeffs: dict[int, int], const: int) -> None:
        """Add the constraint sum(coeffs[j] * x_j) + const >= 0."""
        clean = {j: c for j, c in coeffs.items() if c}
        for j in clean:
            if not 0 <= j < self.nvars:
                raise ValueError(f"row mentions unknown variable {j}")
        self._rows.append((clean, const))
        self._compiled = None

    @property
    def rows(self) -> list[tuple[dict[int, int], int]]:
        return list(self._rows)

    def _compile(self):
        if self._compiled is not None:
            return self._compiled
        pre: list[int] = []
        lowers: list[list] = [[] for _ in range(self.nvars)]
        uppers: list[list] = [[] for _ in range(self.nvars)]
        for coeffs, const in self._rows:
            if not coeffs:
                pre.append(const)
                continue
            k = max(coeffs)
            ck = coeffs[k]
            terms = tuple((j, c) for j, c in coeffs.items() if j != k)
            if ck > 0:
                # ck*x + rest >= 0  =>  x >= ceil(-rest/ck) = -(rest // ck)
                lowers[k].append((ck, terms, const))
            else:
                # rest - d*x >= 0  =>  x <= rest // d
                uppers[k].append((-ck, terms, const))
        self._compiled = (pre, [tuple(l) for l in lowers], [tuple(u) for u in uppers])
        return self._compiled

    def count(self, budget: Budget | None = None) -> int:
        """Number of integer points satisfying the box and every row."""
        pre, lowers, uppers = self._compile()
        if any(c < 0 for c in pre):
            return 0
        nv = self.nvars
        if nv == 0:
            return 1
        if budget is None:
            budget = Budget()
        box_lo = self.box_lo
        box_hi = self.box_hi
        x = [0] * nv
        his = [0] * nv
        total = 0
        last = nv - 1
        k = 0
        pending = 0
        while True:
            pending += 1
            if pending >= _CHECK_BLOCK:
                budget.charge(pending)
                pending = 0
            lo = box_lo
            hi = box_hi
            for ck, terms, const in lowers[k]:
                s = const
                for j, c in terms:
                    s += c * x[j]
                b = -(s // ck)
                if b > lo:
                    lo = b
            for dk, terms, const in uppers[k]:
                s = const
                for j, c in terms:
                    s += c * x[j]
                b = s // dk
                if b < hi:
                    hi = b
            if k == last:
                if hi >= lo:
                    total += hi - lo + 1
                descend = False
            elif lo > hi:
                descend = False
            else:
                x[k] = lo
                his[k] = hi
                k += 1
                descend = True
            if not descend:
                k -= 1
                while k >= 0 and x[k] >= his[k]:
                    k -= 1
                if k < 0:
                    budget.charge(pending)
                    return total
                x[k] += 1
                k += 1

    def solutions(self, budget: Budget | None = None) -> Iterator[tuple[int, ...]]:
        """Yield every solution vector. Debug path: materializes points.

        Counting uses :meth:`count`, which never builds the vectors; this
        iterator exists for validation and inspection only.
        """
        pre, lowers, uppers = self._compile()
        if any(c < 0 for c in pre):
            return
        nv = self.nvars
        if nv == 0:
            yield ()
            return
        if budget is None:
            budget = Budget()
        x = [0] * nv
        his = [0] * nv
        last = nv - 1
        k = 0
        while True:
            budget.charge(1)
            lo = self.box_lo
            hi = self.box_hi
            for ck, terms, const in lowers[k]:
                s = const
                for j, c in terms:
                    s += c * x[j]
                b = -(s // ck)
                if b > lo:
                    lo = b
            for dk, terms, const in uppers[k]:
                s = const
                for j, c in terms:
                    s += c * x[j]
                b = s // dk
                if b < hi:
                    hi = b
            if k == last:
                for v in range(lo, hi + 1):
                    x[k] = v
                    yield tuple(x)
                descend = False
            elif lo > hi:
                descend = False
            else:
                x[k] = lo
                his[k] = hi
                k += 1
                descend = True
            if not descend:
                k -= 1
                while k >= 0 and x[k] >= his[k]:
                    k -= 1
                if k < 0:
                    return
                x[k] += 1
                k += 1
