"""Algebraic admissibility certificates for mass assignments on Grassmannians.

The main entry points are :func:`check` for a single (d, l, k, j) tuple,
:func:`search_min_d`, and the building blocks in :mod:`massadmit.f2poly`,
:mod:`massadmit.grassmann`, :mod:`massadmit.dickson` and
:mod:`massadmit.index`.
"""

from .admissibility import (
    TABLE1,
    AdmissibilityReport,
    Tuple4,
    Verdict,
    check,
    mvz_upper,
    ramos_lower,
    search_min_d,
    theorem2_bound,
)
from .dickson import dickson_coeffs, dickson_top, euler_class
from .f2poly import Monomial, Poly, VarSpace
from .grassmann import GrassmannSpec, dual_classes, graded_basis, q_binomial
from .index import config_index_generators, crabb_division, membership_fast, membership_oracle

__version__ = "0.1.0"

__all__ = [
    "TABLE1", "AdmissibilityReport", "Tuple4", "Verdict", "check", "mvz_upper", "ramos_lower",
    "search_min_d", "theorem2_bound", "dickson_coeffs", "dickson_top", "euler_class", "Monomial",
    "Poly", "VarSpace", "GrassmannSpec", "dual_classes", "graded_basis", "q_binomial",
    "config_index_generators", "crabb_division", "membership_fast", "membership_oracle",
]
