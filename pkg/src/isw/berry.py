"""Berry phase of the occupation states under ``U(theta) = exp(-i theta J_z)``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .fockrep import ideal_number_operator, number_operator
from .statmap import Phase, StatParams, _check_nu, k_to_nu

MIN_STEPS = 16


@dataclass(frozen=True)
class BerryResult:
    nu: int
    eta: float
    k_restricted: Fraction


def berry_exponent(nu: int, params: StatParams) -> Fraction:
    """``eta / 2 pi = nu - n/2`` as an exact rational."""
    _check_nu(nu, params)
    return nu - Fraction(params.n, 2)


def berry_phase_analytic(nu: int, params: StatParams) -> float:
    return 2 * math.pi * float(berry_exponent(nu, params))


def jz_operator(params: StatParams, folded: bool = False) -> np.ndarray:
    """``N - n/2``; ``folded=True`` uses the arccos form of N."""
    N = number_operator(params) if folded else ideal_number_operator(params)
    return N - params.n / 2 * np.eye(params.dim)


def _loop_unitary(jz_diag: np.ndarray, theta: np.ndarray) -> np.ndarray:
    # U(theta) is diagonal in the occupation basis; rows index theta
    return np.exp(-1j * np.outer(theta, jz_diag))


def berry_phase_numeric(nu: int, params: StatParams, steps: int,
                        folded: bool = False) -> float:
    """``i * loop integral <nu| U^+ dU/dtheta |nu>`` over ``[0, 2 pi]``.

    Central difference with ``h = 2 pi/steps`` for the derivative and the
    trapezoid rule on the same grid.
    """
    _check_nu(nu, params)
    if steps < MIN_STEPS:
        raise ValueError(f"steps must be >= {MIN_STEPS}, got {steps}")
    jz = jz_operator(params, folded)
    if not np.allclose(jz, np.diag(np.diag(jz))):
        raise ValueError("J_z is expected to be diagonal in the occupation basis")
    jz_diag = np.diag(jz).real[nu:nu + 1]
    h = 2 * math.pi / steps
    theta = np.linspace(0.0, 2 * math.pi, steps + 1)
    U = _loop_unitary(jz_diag, theta)[:, 0]
    dU = (_loop_unitary(jz_diag, theta + h) - _loop_unitary(jz_diag, theta - h))[:, 0] / (2 * h)
    integrand = 1j * U.conj() * dU
    return float(np.trapezoid(integrand, dx=h).real)


def berry_phase_richardson(nu: int, params: StatParams, steps: int,
                           folded: bool = False) -> float:
    """Combine ``steps`` and ``2*steps`` runs to cancel the h^2 error term."""
    coarse = berry_phase_numeric(nu, params, steps, folded)
    fine = berry_phase_numeric(nu, params, 2 * steps, folded)
    return (4 * fine - coarse) / 3


def berry_phase_winding(k, params: StatParams) -> float:
    """``2 pi (2k/g - 1/(2 alpha g))`` for a state winding label ``k``."""
    k_to_nu(k, params)
    exponent = 2 * Fraction(k) / params.g - 1 / (2 * params.alpha * params.g)
    return 2 * math.pi * float(exponent)


def winding_restriction(params: StatParams) -> list[Fraction]:
    """Winding numbers forced by ``e^{i eta_nu} = e^{i 2 pi k alpha}``.

    ``k_nu = (nu - n/2)/alpha``; n=3, g=2 gives -9, -3, 3, 9.
    """
    return [berry_exponent(nu, params) / params.alpha for nu in params.levels()]


def restriction_phase_mismatch(params: StatParams) -> list[tuple[Phase, Phase]]:
    """Pairs ``(e^{i 2 pi k alpha}, e^{i eta})`` that disagree; empty when consistent."""
    bad = []
    for nu, k in zip(params.levels(), winding_restriction(params)):
        lhs, rhs = Phase(k * params.alpha), Phase(berry_exponent(nu, params))
        if lhs != rhs:
            bad.append((lhs, rhs))
    return bad


def berry_table(params: StatParams, steps: int, folded: bool = False) -> list[BerryResult]:
    ks = winding_restriction(params)
    return [BerryResult(nu, berry_phase_numeric(nu, params, steps, folded), ks[nu])
            for nu in params.levels()]
