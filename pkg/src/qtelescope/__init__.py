"""Exact-arithmetic verification of two classical partition identities
through telescoping families of weight-preserving bijections.

The package is organized bottom-up:

    qalgebra    exact sparse Laurent polynomials and truncated q-series
    partitions  partition objects (zero parts allowed) and enumerators
    telescope   generic bijection / telescoping / cancelation checkers
    macmahon    the square-plus-even-partition families and both step maps
    andrews12   the staircase triples, classification, bijection, involution
    cli         command-line driver and text diagram rendering

Every check is exhaustive over finite or weight-capped slices and returns
a Certificate; nothing is floating point and nothing is sampled.
"""

from .qalgebra import (LaurentPoly, TruncatedSeries, factor_product,
                       gaussian_binomial, rhs_andrews, truncate)
from .partitions import (Partition, SquareSide, enum_distinct_range,
                         enum_even_bounded, enum_even_capped, staircase)
from .telescope import (Certificate, IterationBudgetExceeded, MarkedObject,
                        cancelation_psi, check_graded_bijection,
                        telescoping_sum_check)
from . import andrews12, macmahon

__all__ = [
    "LaurentPoly", "TruncatedSeries", "factor_product", "gaussian_binomial",
    "rhs_andrews", "truncate",
    "Partition", "SquareSide", "enum_distinct_range", "enum_even_bounded",
    "enum_even_capped", "staircase",
    "Certificate", "IterationBudgetExceeded", "MarkedObject",
    "cancelation_psi", "check_graded_bijection", "telescoping_sum_check",
    "andrews12", "macmahon",
]
