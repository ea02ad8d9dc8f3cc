"""Exact combinatorics of Littlewood-Richardson and Newell-Littlewood numbers.

The package counts integer points of hive polytopes to evaluate
Littlewood-Richardson coefficients c and the composite trapezoid variant
that evaluates Newell-Littlewood coefficients n, fits the quasi-period-2
Ehrhart quasi-polynomials of stretched triples, reconstructs canonical
rational generating functions, and cross-checks everything against three
independent oracles (a Schur-polynomial expansion, a constant-term series
extraction, and small-rank classical Weyl characters).

All arithmetic is exact (Python integers and fractions.Fraction).
"""

from .partition import Partition, parse, render, stretch, triple_parity, weight
from .hive_lr import count_lr, count_lr_auto, schur_coefficient_oracle
from .khive_nl import count_nl_hive, count_nl_lrsum, k_polytope
from .stretch import (
    QuasiPolynomial2,
    RationalGF,
    check_conjectures,
    expand_gf,
    fit_quasi_polynomial,
    stability_scan,
    stretched_sequence,
    to_generating_function,
)
from ._hivecore import BudgetExceededError

__all__ = [
    "Partition",
    "parse",
    "render",
    "weight",
    "stretch",
    "triple_parity",
    "count_lr",
    "count_lr_auto",
    "schur_coefficient_oracle",
    "count_nl_hive",
    "count_nl_lrsum",
    "k_polytope",
    "QuasiPolynomial2",
    "RationalGF",
    "stretched_sequence",
    "fit_quasi_polynomial",
    "to_generating_function",
    "expand_gf",
    "check_conjectures",
    "stability_scan",
    "BudgetExceededError",
]

__version__ = "0.1.0"
