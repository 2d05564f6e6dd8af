"""Occupation-number <-> winding-number mapping and exact phase arithmetic.

Every unit complex factor e^{i 2 pi r} is carried as the exact rational ``r``
so that fractional powers never touch a principal branch.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational


@dataclass(frozen=True, order=True)
class Phase:
    """The unit complex number ``exp(2j*pi*r)`` with ``r`` kept exact, mod 1."""

    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r) % 1)

    def __mul__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self.r + other.r)

    def __truediv__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self.r - other.r)

    def __pow__(self, m: int | Fraction) -> Phase:
        # rational powers scale the exponent; callers choose the branch by choosing r
        return Phase(self.r * Fraction(m))

    def conjugate(self) -> Phase:
        return Phase(-self.r)

    def __complex__(self) -> complex:
        r = self.r
        # exact values on the axes so that e.g. -1 is really -1
        if r == 0:
            return 1 + 0j
        if r == Fraction(1, 2):
            return -1 + 0j
        if r == Fraction(1, 4):
            return 1j
        if r == Fraction(3, 4):
            return -1j
        return cmath.exp(2j * math.pi * float(r))

    def to_complex(self) -> complex:
        return complex(self)

    def __str__(self):
        return f"e^(2pi i*{self.r})"


@dataclass(frozen=True)
class StatParams:
    """Maximum occupation ``n`` and closure count ``g``.

    ``alpha = 1/(n g)`` is the anyon statistical parameter and ``Q`` the
    deformation phase ``e^{i 2 pi/(n+1)}``.
    """

    n: int
    g: int = 2
    alpha: Fraction = field(init=False)
    Q: Phase = field(init=False)

    def __post_init__(self):
        for name in ("n", "g"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        alpha = Fraction(1, self.n * self.g)
        object.__setattr__(self, "alpha", alpha)
        # (e^{i pi alpha g})^{2/(1+alpha g)}: exponent alpha g/2 * 2/(1+alpha g)
        object.__setattr__(self, "Q", Phase(alpha * self.g / (1 + alpha * self.g)))

    @property
    def dim(self) -> int:
        return self.n + 1

    def levels(self):
        """Occupation levels 0, 1, ..., n (step 1)."""
        return range(self.n + 1)

    def windings(self):
        """State winding labels 0, g/2, g, ..., n g/2 (step g/2)."""
        step = Fraction(self.g, 2)
        return [nu * step for nu in self.levels()]


def _check_nu(nu: int, params: StatParams) -> int:
    if isinstance(nu, bool) or not isinstance(nu, int):
        raise TypeError(f"occupation must be an int, got {nu!r}")
    if not 0 <= nu <= params.n:
        raise ValueError(f"occupation {nu} outside [0, {params.n}]")
    return nu


def nu_to_k(nu: int, params: StatParams) -> Fraction:
    _check_nu(nu, params)
    return Fraction(nu * params.g, 2)


def k_to_nu(k: Rational | int, params: StatParams) -> int:
    ratio = 2 * Fraction(k) / params.g
    if ratio.denominator != 1:
        raise ValueError(f"2k/g = {ratio} is not an integer")
    nu = int(ratio)
    if not 0 <= nu <= params.n:
        raise ValueError(f"winding {k} maps to occupation {nu} outside [0, {params.n}]")
    return nu


def anyon_phase(k: Rational | int, params: StatParams) -> Phase:
    """e^{i 2 pi k alpha}."""
    return Phase(Fraction(k) * params.alpha)


def gentile_phase(nu: int, params: StatParams) -> Phase:
    """e^{i 2 pi nu/(n+1)}."""
    _check_nu(nu, params)
    return Phase(Fraction(nu, params.n + 1))


def phase_exponents(nu: int, params: StatParams) -> tuple[Fraction, Fraction]:
    """Unreduced exponents of the anyon side and of the powered Gentile side.

    The anyon side is ``k alpha``, the Gentile side ``nu/(n+1) * (n+1)/(2n)``.
    Both are returned before reduction mod 1.
    """
    k = nu_to_k(nu, params)
    lhs = k * params.alpha
    rhs = Fraction(nu, params.n + 1) * Fraction(params.n + 1, 2 * params.n)
    return lhs, rhs


def phase_equality_residual(params: StatParams) -> float:
    worst = 0.0
    for nu in params.levels():
        lhs, rhs = phase_exponents(nu, params)
        worst = max(worst, abs(complex(Phase(lhs)) - complex(Phase(rhs))))
    return worst
