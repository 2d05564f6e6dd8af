"""Truncated power series in one variable, as coefficient lists.

Works with any field-like number type; Fraction coefficients stay exact.
"""
from __future__ import annotations

from fractions import Fraction


def mul(a, b, order: int):
    """Product of ``a`` and ``b`` keeping powers below ``order``."""
    out = [0] * order
    for i, ai in enumerate(a[:order]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order - i]):
            out[i + j] += ai * bj
    return out


def inv_sqrt(s, order: int):
    """Coefficients of ``s**(-1/2)`` to ``order`` terms; needs ``s[0] == 1``.

    From ``2 s t' = -s' t`` term by term:
    ``t_k = -(1/(2k)) * sum_{j=1..k} (2k - j) s_j t_{k-j}``.
    """
    if not s or s[0] != 1:
        raise ValueError("series must have unit constant term")
    s = list(s) + [0] * max(0, order - len(s))
    t = [Fraction(1)] + [0] * (order - 1)
    for k in range(1, order):
        acc = 0
        for j in range(1, k + 1):
            acc += (2 * k - j) * s[j] * t[k - j]
        # int accumulators (all-zero or integer input) must not fall into float division
        t[k] = Fraction(-acc, 2 * k) if isinstance(acc, int) else -acc / (2 * k)
    return t[:order]
