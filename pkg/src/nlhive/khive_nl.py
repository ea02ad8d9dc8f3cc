"""Newell-Littlewood coefficients two independent ways.

The primary route counts labelings of a trapezoidal grid built from three
triangular hives glued along shared edges; concavity holds for every unit
rhombus except those straddling the two glue seams, and the three edge
label sequences running into the wide corners must be weakly decreasing,
which closes up into three extra inequalities. The oracle route expands
the coefficient as a sum of products of three Littlewood-Richardson
numbers over all ways to split the weight budget. Each route checks the
other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ._hivecore import Budget, LinearSystem
from .hive_lr import count_lr_auto
from .partition import Partition


def _prefix(parts, n):
    out = [0]
    for k in range(n):
        out.append(out[-1] + (parts[k] if k < len(parts) else 0))
    return out


def coupling_weights(mu, nu, la) -> tuple[int, int, int] | None:
    """Weights of the three gluing partitions, or None when none can exist.

    The splits solve |mu| = wA + wB, |nu| = wA + wG, |la| = wB + wG; they
    are integers only when |mu| + |nu| + |la| is even and nonnegative only
    inside the triangle inequality on the weights.
    """
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    total = mu.weight + nu.weight + la.weight
    if total % 2:
        return None
    wa = (mu.weight + nu.weight - la.weight) // 2
    wb = (la.weight + mu.weight - nu.weight) // 2
    wg = (nu.weight + la.weight - mu.weight) // 2
    if wa < 0 or wb < 0 or wg < 0:
        return None
    return wa, wb, wg


class _Trapezoid:
    """Vertex bookkeeping for the glued grid of side n.

    Vertices are (h, i) with 0 <= h <= n, 0 <= i <= 2n - h. Row 0 carries
    the running totals of mu then of nu; row n carries wa plus the running
    totals of la; the left edge is free (the first gluing partition's
    running totals) and the right edge mirrors it shifted by the top-right
    corner value. Everything else is free.
    """

    def __init__(self, mu: Partition, nu: Partition, la: Partition, n: int):
        wts = coupling_weights(mu, nu, la)
        if wts is None:
            raise ValueError("no consistent corner weights for this triple")
        self.mu, self.nu, self.la, self.n = mu, nu, la, n
        self.wa, self.wb, self.wg = wts
        self.smu = _prefix(tuple(mu), n)
        self.snu = _prefix(tuple(nu), n)
        self.sla = _prefix(tuple(la), n)
        self.half = self.wa + la.weight
        self.width = mu.weight + nu.weight
        # variable ids: left-edge values first, then interior row by row
        self.nvars = (n - 1) + sum(2 * n - h - 1 for h in range(1, n)) if n else 0
        self._interior_base = n - 1
        self._row_offsets = []
        off = self._interior_base
        for h in range(1, n):
            self._row_offsets.append(off)
            off += 2 * n - h - 1

    def expr(self, h: int, i: int) -> tuple[int | None, int]:
        """(variable id or None, constant) with value = var + constant."""
        n = self.n
        if h == 0:
            return (None, self.smu[i] if i <= n else self.smu[n] + self.snu[i - n])
        if h == n:
            return (None, self.wa + self.sla[i])
        if i == 0:
            return (h - 1, 0)
        if i == 2 * n - h:
            return (n - h - 1, self.half)
        return (self._row_offsets[h - 1] + (i - 1), 0)

    def vertices(self):
        return [(h, i) for h in range(self.n + 1) for i in range(2 * self.n - h + 1)]

    def rhombus_quadruples(self):
        """(plus, plus, minus, minus) quadruples, seam-straddling ones skipped."""
        n = self.n
        for h in range(n):
            for i in range(2 * n - h - 1):
                if i + h == n - 1:
                    continue
                yield ((h, i + 1), (h + 1, i), (h, i), (h + 1, i + 1))
        for h in range(n):
            for i in range(1, 2 * n - h):
                if i == n:
                    continue
                yield ((h, i), (h + 1, i), (h, i + 1), (h + 1, i - 1))
        for h in range(1, n):
            for i in range(2 * n - h):
                yield ((h, i), (h, i + 1), (h - 1, i + 1), (h + 1, i))

    def tail_quadruples(self):
        """Rows forcing the last edge label into each wide corner >= 0."""
        n = self.n
        return [
            (((n, 0),), ((n - 1, 0),)),
            (((0, n),), ((1, n - 1),)),
            (((n, n),), ((n - 1, n),)),
        ]


def _row_from_vertices(trap: _Trapezoid, plus, minus) -> tuple[dict[int, int], int]:
    coeffs: dict[int, int] = {}
    const = 0
    for v in plus:
        var, c = trap.expr(*v)
        const += c
        if var is not None:
            coeffs[var] = coeffs.get(var, 0) + 1
    for v in minus:
        var, c = trap.expr(*v)
        const -= c
        if var is not None:
            coeffs[var] = coeffs.get(var, 0) - 1
    return coeffs, const


def _add_cut(sys: LinearSystem, trap: _Trapezoid, terms, const: int) -> None:
    """terms is a list of (coeff, (h, i)); adds sum coeff*value + const >= 0."""
    coeffs: dict[int, int] = {}
    for c, v in terms:
        var, k = trap.expr(*v)
        const += c * k
        if var is not None:
            coeffs[var] = coeffs.get(var, 0) + c
    sys.add_row(coeffs, const)


def _composite_system(trap: _Trapezoid, cuts: bool = True) -> LinearSystem:
    n = trap.n
    sys = LinearSystem(trap.nvars, box_hi=trap.width)
    for plus0, plus1, minus0, minus1 in trap.rhombus_quadruples():
        sys.add_row(*_row_from_vertices(trap, (plus0, plus1), (minus0, minus1)))
    for plus, minus in trap.tail_quadruples():
        sys.add_row(*_row_from_vertices(trap, plus, minus))
    if not cuts or n < 2:
        return sys
    mu, nu, la = trap.mu, trap.nu, trap.la
    smu, snu, sla = trap.smu, trap.snu, trap.sla
    wa, half = trap.wa, trap.half

    def part(p, k):
        return p[k - 1] if k - 1 < len(p) else 0

    # left-edge sweep: the first gluing partition's running totals
    for h in range(1, n):
        _add_cut(sys, trap, [(1, (h, 0)), (-1, (h - 1, 0))], 0)
        if h >= 2:
            _add_cut(sys, trap, [(-1, (h, 0)), (2, (h - 1, 0)), (-1, (h - 2, 0))], 0)
        _add_cut(sys, trap, [(-1, (h, 0))], min(smu[h], snu[h]))
        _add_cut(sys, trap, [(1, (h, 0))],
                 -wa + min(smu[n] - smu[h], snu[n] - snu[h]))
        # the n-h increments still to come each fit under the current one
        _add_cut(sys, trap, [(n - h + 1, (h, 0)), (-(n - h), (h - 1, 0))], -wa)
    # third gluing partition: running totals up the shared column i = n
    for h in range(1, n):
        _add_cut(sys, trap, [(1, (h, n)), (-1, (h - 1, n))], 0)
        if h >= 2:
            _add_cut(sys, trap, [(-1, (h, n)), (2, (h - 1, n)), (-1, (h - 2, n))], 0)
        _add_cut(sys, trap, [(-1, (h, n)), (1, (h - 1, n))],
                 min(part(la, h), part(nu, h)))
        _add_cut(sys, trap, [(1, (h, n))],
                 -half + min(sla[n] - sla[h], snu[n] - snu[h]))
    _add_cut(sys, trap, [(2, (n - 1, n)), (-1, (n - 2, n))], -half)
    # second gluing partition: running totals down the seam i + h = n
    for h in range(2, n):
        j = n - h + 1  # edge label index dropping across this vertex
        _add_cut(sys, trap, [(-1, (h, n - h)), (1, (h - 1, j))], 0)
        _add_cut(sys, trap, [(1, (h, n - h)), (-1, (h - 1, j))],
                 min(part(mu, j), part(la, j)))
        _add_cut(sys, trap, [(-1, (h, n - h)), (2, (h - 1, j)), (-1, (h - 2, j + 1))], 0)
        _add_cut(sys, trap, [(1, (h, n - h))],
                 -max(smu[n - h], smu[n] - (sla[n] - sla[n - h])))
    # first seam label, read at the vertex next to the bottom-left corner
    _add_cut(sys, trap, [(1, (n - 1, 1))], -wa)
    _add_cut(sys, trap, [(-1, (n - 1, 1))], wa + min(part(mu, 1), part(la, 1)))
    _add_cut(sys, trap, [(2, (n - 1, 1)), (-1, (n - 2, 2))], -wa)
    return sys


def count_nl_hive(mu, nu, la, n: int | None = None,
                  budget: Budget | None = None, cuts: bool = True) -> int:
    """Newell-Littlewood coefficient of (mu, nu, la) by glued-hive counting.

    n fixes the grid side; any n at least the longest partition length
    gives the same count. cuts toggles redundant pruning rows that never
    change the count (they are implied by how solutions split into three
    triangular hives) but keep the search from wandering.
    """
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    if coupling_weights(mu, nu, la) is None:
        return 0
    if la.length > mu.length + nu.length:
        return 0
    if mu.length > nu.length + la.length or nu.length > mu.length + la.length:
        return 0
    if n is None:
        n = max(mu.length, nu.length, la.length)
    if n < max(mu.length, nu.length, la.length):
        raise ValueError("grid side too small for the given partitions")
    if n == 0:
        return 1
    trap = _Trapezoid(mu, nu, la, n)
    return _composite_system(trap, cuts=cuts).count(budget)


@dataclass(frozen=True)
class CompositeHive:
    """A concrete glued-hive labeling, for inspection and validation."""

    mu: Partition
    nu: Partition
    la: Partition
    n: int
    labels: dict[tuple[int, int], int]

    def gluing_partitions(self) -> tuple[Partition, Partition, Partition]:
        """The three edge-difference sequences, as partitions."""
        b = self.labels
        n = self.n
        alpha = [b[(h, 0)] - b[(h - 1, 0)] for h in range(1, n + 1)]
        beta = [b[(n - j, j)] - b[(n - j + 1, j - 1)] for j in range(1, n + 1)]
        gamma = [b[(h, n)] - b[(h - 1, n)] for h in range(1, n + 1)]
        return Partition(alpha), Partition(beta), Partition(gamma)

    def is_valid(self) -> bool:
        trap = _Trapezoid(self.mu, self.nu, self.la, self.n)
        b = self.labels
        if set(b) != set(trap.vertices()):
            return False
        for h, i in trap.vertices():
            var, c = trap.expr(h, i)
            if var is None and b[(h, i)] != c:
                return False
        right = all(
            b[(h, 2 * trap.n - h)] == trap.half + b[(trap.n - h, 0)]
            for h in range(1, trap.n))
        if not right:
            return False
        for p0, p1, m0, m1 in trap.rhombus_quadruples():
            if b[p0] + b[p1] < b[m0] + b[m1]:
                return False
        for plus, minus in trap.tail_quadruples():
            if b[plus[0]] < b[minus[0]]:
                return False
        return True


def iter_nl_hives(mu, nu, la, n: int | None = None,
                  budget: Budget | None = None):
    """Yield every glued-hive labeling. Debug path; counting never builds these."""
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    if coupling_weights(mu, nu, la) is None:
        return
    if n is None:
        n = max(mu.length, nu.length, la.length)
    trap = _Trapezoid(mu, nu, la, n)
    if n == 0:
        yield CompositeHive(mu, nu, la, 0, {(0, 0): 0})
        return
    sys = _composite_system(trap, cuts=True)
    for point in sys.solutions(budget):
        labels = {}
        for v in trap.vertices():
            var, c = trap.expr(*v)
            labels[v] = c if var is None else point[var] + c
        yield CompositeHive(mu, nu, la, n, labels)


def _sub_partitions(cap: tuple[int, ...], total: int) -> list[Partition]:
    """Partitions of total fitting part-wise under cap."""
    if total < 0:
        return []
    suffix = [0] * (len(cap) + 1)
    for k in range(len(cap) - 1, -1, -1):
        suffix[k] = suffix[k + 1] + cap[k]
    out: list[Partition] = []
    acc: list[int] = []

    def rec(k: int, rem: int, prev: int):
        if rem == 0:
            out.append(Partition(acc))
            return
        if k >= len(cap) or rem > suffix[k]:
            return
        for v in range(min(cap[k], prev, rem), 0, -1):
            acc.append(v)
            rec(k + 1, rem - v, v)
            acc.pop()

    rec(0, total, total)
    return out


def count_nl_lrsum(mu, nu, la, budget: Budget | None = None) -> int:
    """Newell-Littlewood coefficient as a sum of Littlewood-Richardson products.

    Runs over all splits (a, b, g) of the three weight budgets and sums
    lr(a, b; mu) * lr(a, g; nu) * lr(b, g; la). Oracle route: shares no hive
    geometry with count_nl_hive beyond the one-triangle counter.
    """
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    wts = coupling_weights(mu, nu, la)
    if wts is None:
        return 0
    wa, wb, wg = wts

    def caps(p, q):
        m = min(p.length, q.length)
        return tuple(min(p[k], q[k]) for k in range(m))

    total = 0
    for a in _sub_partitions(caps(mu, nu), wa):
        for b in _sub_partitions(caps(mu, la), wb):
            c1 = count_lr_auto(a, b, mu, budget=budget)
            if not c1:
                continue
            for g in _sub_partitions(caps(nu, la), wg):
                c2 = count_lr_auto(a, g, nu, budget=budget)
                if not c2:
                    continue
                c3 = count_lr_auto(b, g, la, budget=budget)
                if c3:
                    total += c1 * c2 * c3
    return total


@dataclass(frozen=True)
class KPolytopeSystem:
    """The glued-grid constraint system with every vertex kept as an unknown.

    Unknowns are all grid labels in row-major order (h ascending, then i).
    equalities pin the boundary: each entry means sum(coeffs) == rhs, with
    coeffs sparse over unknown indices. inequalities mean sum(coeffs) >= rhs.
    Right-hand sides are linear in the parts of (mu, nu, la), so scaling the
    triple by t scales every rhs by t and leaves the coefficient rows fixed.
    """

    mu: Partition
    nu: Partition
    la: Partition
    n: int
    vertex_order: tuple[tuple[int, int], ...]
    equalities: tuple[tuple[tuple[tuple[int, int], ...], int], ...]
    inequalities: tuple[tuple[tuple[tuple[int, int], ...], int], ...]

    @property
    def num_unknowns(self) -> int:
        return len(self.vertex_order)

    @property
    def degrees_of_freedom(self) -> int:
        return self.num_unknowns - len(self.equalities)

    def to_text(self) -> str:
        names = {v: f"b[{v[0]}][{v[1]}]" for v in self.vertex_order}
        order = list(self.vertex_order)

        def side(coeffs):
            bits = []
            for j, c in coeffs:
                nm = names[order[j]]
                if c == 1:
                    bits.append(f"+ {nm}")
                elif c == -1:
                    bits.append(f"- {nm}")
                else:
                    bits.append(f"{'+' if c > 0 else '-'} {abs(c)}*{nm}")
            text = " ".join(bits) if bits else "0"
            return text[2:] if text.startswith("+ ") else text

        lines = [f"unknowns: {len(order)} grid labels, row-major", ""]
        for coeffs, rhs in self.equalities:
            lines.append(f"{side(coeffs)} == {rhs}")
        for coeffs, rhs in self.inequalities:
            lines.append(f"{side(coeffs)} >= {rhs}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "mu": list(self.mu),
            "nu": list(self.nu),
            "la": list(self.la),
            "n": self.n,
            "vertex_order": [list(v) for v in self.vertex_order],
            "equalities": [
                {"coeffs": [[j, c] for j, c in coeffs], "rhs": rhs}
                for coeffs, rhs in self.equalities],
            "inequalities": [
                {"coeffs": [[j, c] for j, c in coeffs], "rhs": rhs}
                for coeffs, rhs in self.inequalities],
            "sense": ">=",
        }, indent=1)


def k_polytope(mu, nu, la, n: int | None = None) -> KPolytopeSystem:
    """Full inequality description whose lattice points the counter counts."""
    mu = Partition(mu)
    nu = Partition(nu)
    la = Partition(la)
    wts = coupling_weights(mu, nu, la)
    if wts is None:
        raise ValueError("no consistent corner weights for this triple")
    wa, _, _ = wts
    if n is None:
        n = max(mu.length, nu.length, la.length)
    trap = _Trapezoid(mu, nu, la, n)
    order = tuple(trap.vertices())
    index = {v: j for j, v in enumerate(order)}

    def sparse(terms):
        acc: dict[int, int] = {}
        for c, v in terms:
            j = index[v]
            acc[j] = acc.get(j, 0) + c
        return tuple(sorted((j, c) for j, c in acc.items() if c))

    eqs = [(sparse([(1, (0, 0))]), 0)]
    if n:
        eqs.append((sparse([(1, (n, 0))]), wa))
    for h in range(1, n):
        eqs.append((sparse([(1, (h, 2 * n - h)), (-1, (n, n)), (-1, (n - h, 0))]), 0))
    for i in range(1, n + 1):
        eqs.append((sparse([(1, (0, i)), (-1, (0, i - 1))]),
                    mu[i - 1] if i - 1 < len(mu) else 0))
        eqs.append((sparse([(1, (0, n + i)), (-1, (0, n + i - 1))]),
                    nu[i - 1] if i - 1 < len(nu) else 0))
        eqs.append((sparse([(1, (n, i)), (-1, (n, i - 1))]),
                    la[i - 1] if i - 1 < len(la) else 0))
    ineqs = []
    if n:
        for p0, p1, m0, m1 in trap.rhombus_quadruples():
            ineqs.append((sparse([(1, p0), (1, p1), (-1, m0), (-1, m1)]), 0))
        for plus, minus in trap.tail_quadruples():
            ineqs.append((sparse([(1, plus[0]), (-1, minus[0])]), 0))
    return KPolytopeSystem(mu, nu, la, n, order, tuple(eqs), tuple(ineqs))
