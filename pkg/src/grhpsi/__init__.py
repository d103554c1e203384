"""Explicit GRH-conditional estimates for Dedekind zeta functions.

Smoothed prime counting functions, certified zero-sum majorants, truncation
levels for the residue of zeta_K at s = 1, and small prime ideal bounds.
"""
from ._kernels import BACKEND
from .fields import FieldDescriptor, load_field, load_field_file, quadratic_field, rational_field
from .interval import Interval
from .psi import psi_m, theorem_bound
from .residue import least_n, log_residue, remainder_basic, remainder_improved

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "FieldDescriptor", "Interval", "least_n", "load_field", "load_field_file", "log_residue",
    "psi_m", "quadratic_field", "rational_field", "remainder_basic", "remainder_improved", "theorem_bound",
]
