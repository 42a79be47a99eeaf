"""Exact sign-twisted generating functions over parabolic quotients.

Signed permutation groups of the three classical families carry, next to
the Coxeter length, an odd-length statistic counting inversions and
negative-sum pairs at odd distance.  This package enumerates the
generating function sum of (-1)^length x^(odd length) over every
parabolic quotient, evaluates the matching closed product formulas, and
decides when the resulting polynomial factors into cyclotomics.
"""

from .zpoly import (
    IntPoly,
    alt_product,
    cyclotomic,
    cyclotomic_factors,
    is_cyclotomic_product,
    q_multinomial,
    trinomial_cyclotomic,
)
from .indexset import IndexSet, compress, is_compressed, m_of, noncyclotomic_condition
from .sperm import SignedPerm, descent_set, ell, elements, odd_length
from .genfun import (
    BUDGET,
    BudgetError,
    DescentTable,
    brute_quotient,
    brute_table,
    closed_A,
    closed_B,
    closed_D,
    closed_poly,
    M_of,
)
from .checks import TIERS, CheckContext, CheckRow, CHECKS, run_checks

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "IndexSet",
    "SignedPerm",
    "BUDGET",
    "BudgetError",
    "DescentTable",
    "TIERS",
    "CheckContext",
    "CheckRow",
    "CHECKS",
    "alt_product",
    "brute_quotient",
    "brute_table",
    "closed_A",
    "closed_B",
    "closed_D",
    "closed_poly",
    "compress",
    "cyclotomic",
    "cyclotomic_factors",
    "descent_set",
    "ell",
    "elements",
    "is_compressed",
    "is_cyclotomic_product",
    "m_of",
    "M_of",
    "noncyclotomic_condition",
    "odd_length",
    "q_multinomial",
    "run_checks",
    "trinomial_cyclotomic",
]
