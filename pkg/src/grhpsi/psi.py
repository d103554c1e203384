"""Smoothed Chebyshev functions psi_K^(m)(x) = sum_{n <= x} Lambda_K(n) (x - n)^m."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .fields import FieldDescriptor, lambda_table


@dataclass(frozen=True)
class PsiValue:
    m: int
    x: float
    value: float


def _support(K: FieldDescriptor, X: int):
    """(prime powers n <= X with Lambda_K(n) > 0, Lambda_K(n)), cached on the descriptor."""
    memo = K._memo.get("psi_support")
    if memo is None or memo[0] < X:
        size = max(X, 2 * memo[0] if memo else 1024)
        tab = lambda_table(K, size)
        idx = np.flatnonzero(tab).astype(np.float64)
        memo = (size, idx, tab[idx.astype(np.int64)])
        K._memo["psi_support"] = memo
    return memo[1], memo[2]


def psi_m(K: FieldDescriptor, m: int, x: float) -> float:
    """Compensated sum in ascending n, so the result does not depend on the backend."""
    if m not in (0, 1, 2):
        raise ValueError(f"m must be 0, 1 or 2, got {m}")
    if not x >= 1:
        raise ValueError(f"x must be >= 1, got {x}")
    idx, vals = _support(K, int(math.floor(x)))
    return float(_kernels.power_weighted_sum(idx, vals, float(x), m))


def psi_value(K: FieldDescriptor, m: int, x: float) -> PsiValue:
    return PsiValue(m, float(x), psi_m(K, m, x))


# coefficients of the bound for |psi^(m)_K(x) - x^(m+1)/(m+1)|, K != Q
THEOREM_K = {
    1: {"lead": (0.5375, -1.0355, 5.3879), "lin": (1.0155, -2.1041, 8.3419), "const": (1.0, -1.415, 4.0)},
    2: {"lead": (0.3526, -0.8212, 4.4992), "lin": (1.0155, -2.1041, 8.3419), "mid": (1.0, -1.415, 4.0),
        "const": (1.0, -0.9151, 2.0)},
}
THEOREM_Q = {1: (0.0462, 1.838), 2: (0.0015, 1.838)}
# for m = 2 the zero sum enters with the factor m! = 2: 2 * 0.001439963... <= 0.0029
THEOREM_Q_CORRECTED = {1: (0.0462, 1.838), 2: (0.0029, 1.838)}


def _form(c, L, n):
    return c[0] * L + c[1] * n + c[2]


def theorem_bound(K: FieldDescriptor, m: int, x: float, corrected: bool = False) -> float:
    """Right-hand side of the GRH bound for |psi_K^(m)(x) - x^(m+1)/(m+1)|, x >= 3.

    ``corrected`` only changes the rational field with m = 2, where the
    published x^(5/2) coefficient is too small by the factor 2.
    """
    if m not in (1, 2):
        raise ValueError(f"m must be 1 or 2, got {m}")
    if not x >= 3:
        raise ValueError(f"x must be >= 3, got {x}")
    lx = math.log(x)
    if K.degree == 1:
        a, b = (THEOREM_Q_CORRECTED if corrected else THEOREM_Q)[m]
        return a * x ** (m + 0.5) + b * x**m
    L, n = K.log_disc, K.degree
    c = THEOREM_K[m]
    if m == 1:
        return (x**1.5 * _form(c["lead"], L, n) + (n - 1) * x * lx + x * _form(c["lin"], L, n)
                + _form(c["const"], L, n))
    return (x**2.5 * _form(c["lead"], L, n) + (n - 1) * x * x * (lx - 0.5) + x * x * _form(c["lin"], L, n)
            + 2 * x * _form(c["mid"], L, n) + _form(c["const"], L, n))


def theorem_margin(K: FieldDescriptor, m: int, x: float, corrected: bool = False) -> float:
    """theorem_bound minus the actual error; negative means a violation."""
    err = abs(psi_m(K, m, x) - x ** (m + 1) / (m + 1))
    return theorem_bound(K, m, x, corrected) - err
