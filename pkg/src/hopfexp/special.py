"""The confluent hypergeometric limit function 0F1 by direct series summation."""
from __future__ import annotations

import cmath

MAX_TERMS = 100_000
RTOL = 1e-15


def hyp0f1(denom: float, x: complex) -> complex:
    """``0F1(; denom; x) = sum_k x^k / ((denom)_k k!)``.

    Terms are added until the series is past its peak (term ratio below one)
    and the latest term is under ``1e-15`` of the running sum.
    """
    if not cmath.isfinite(complex(x)):
        raise ValueError("0F1 argument must be finite")
    a = float(denom)
    if a <= 0 and a == int(a):
        raise ValueError(f"0F1 is undefined for denominator parameter {denom}")
    x = complex(x)
    total = term = 1.0 + 0j
    peak = 1.0
    for k in range(MAX_TERMS):
        term = term * x / ((a + k) * (k + 1))
        total += term
        peak = max(peak, abs(term))
        past_peak = abs(x) < abs(a + k) * (k + 1)
        # near a zero of the sum, fall back to the cancellation floor of the largest term
        if past_peak and abs(term) <= RTOL * max(abs(total), 1e-2 * RTOL * peak):
            return total
    raise ArithmeticError(f"0F1 series did not converge in {MAX_TERMS} terms")
