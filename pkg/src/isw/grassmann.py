"""Nilpotent generators chi, chibar and the coherent state of b.

A :class:`GrassmannPoly` is a polynomial in ``chibar`` and ``chi`` stored in
normal order (chibar left of chi) where any power reaching ``order`` vanishes.
Only the combination ``zeta = chibar chi`` enters the normalization, and it is
treated as central, so within a polynomial the two generators are multiplied
as commuting symbols. The nontrivial exchange phases live between ``chi`` and
the Fock states, handled by :class:`FormalKet`.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from . import series
from .fockrep import bracket_value, sqrt_bracket
from .statmap import Phase, StatParams, _check_nu


def _check_sign(sign: int) -> int:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return sign


class GrassmannPoly:
    """Truncated polynomial ``sum c[p, q] chibar^p chi^q``.

    ``order`` is the nilpotency degree (``chi**order == 0``); ``None`` turns
    truncation off, which is only useful as a negative control.
    """

    __slots__ = ("terms", "order")

    def __init__(self, terms=None, order: int | None = None):
        self.order = order
        clean = {}
        for (p, q), c in (terms or {}).items():
            if p < 0 or q < 0:
                raise ValueError(f"negative power in monomial {(p, q)}")
            if order is not None and (p >= order or q >= order):
                continue
            if c != 0:
                clean[(p, q)] = c
        self.terms = clean

    @classmethod
    def unit(cls, order=None):
        return cls({(0, 0): Fraction(1)}, order)

    @classmethod
    def chi(cls, order=None, power: int = 1):
        return cls({(0, power): Fraction(1)}, order)

    @classmethod
    def chibar(cls, order=None, power: int = 1):
        return cls({(power, 0): Fraction(1)}, order)

    @classmethod
    def zeta_series(cls, coeffs, order=None):
        """``sum_l coeffs[l] zeta^l`` with ``zeta = chibar chi``."""
        return cls({(l, l): c for l, c in enumerate(coeffs)}, order)

    def _order_with(self, other: GrassmannPoly):
        if self.order is None:
            return other.order
        if other.order is None:
            return self.order
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, GrassmannPoly):
            return self + GrassmannPoly({(0, 0): other}, self.order)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return GrassmannPoly(terms, self._order_with(other))

    __radd__ = __add__

    def __neg__(self):
        return GrassmannPoly({m: -c for m, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, GrassmannPoly):
            return GrassmannPoly({m: c * other for m, c in self.terms.items()}, self.order)
        order = self._order_with(other)
        terms = {}
        for (p1, q1), c1 in self.terms.items():
            for (p2, q2), c2 in other.terms.items():
                m = (p1 + p2, q1 + q2)
                if order is not None and (m[0] >= order or m[1] >= order):
                    continue
                terms[m] = terms.get(m, 0) + c1 * c2
        return GrassmannPoly(terms, order)

    def __rmul__(self, scalar):
        return self * scalar

    def __pow__(self, k: int):
        out = GrassmannPoly.unit(self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GrassmannPoly):
            other = GrassmannPoly({(0, 0): other})
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __getitem__(self, monomial):
        return self.terms.get(monomial, 0)

    def zeta_coefficients(self) -> list:
        """Diagonal coefficients ``c[l, l]`` for l = 0..max degree."""
        top = max((p for p, q in self.terms if p == q), default=0)
        return [self.terms.get((l, l), 0) for l in range(top + 1)]

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "GrassmannPoly(0)"
        parts = [f"{c}*cb^{p}*c^{q}" for (p, q), c in sorted(self.terms.items())]
        return "GrassmannPoly(" + " + ".join(parts) + ")"


class FormalKet:
    """Finite sum ``sum_nu |nu> P_nu`` with Grassmann coefficients on the right."""

    def __init__(self, components: dict[int, GrassmannPoly]):
        self.components = {nu: P for nu, P in components.items() if not P.is_zero()}

    def apply_b(self, params: StatParams) -> FormalKet:
        # b|nu> = sqrt([nu]) |nu-1>
        out = {}
        for nu, P in self.components.items():
            if nu > 0:
                out[nu - 1] = P * sqrt_bracket(nu, params)
        return FormalKet(out)

    def chi_from_left(self, sign: int, params: StatParams) -> FormalKet:
        # chi |nu> P = lambda(nu) |nu> chi P
        out = {}
        for nu, P in self.components.items():
            chi = GrassmannPoly.chi(P.order)
            out[nu] = (chi * P) * complex(commute_chi_state(nu, sign, params))
        return FormalKet(out)

    def max_mismatch(self, other: FormalKet) -> float:
        worst = 0.0
        for nu in set(self.components) | set(other.components):
            a = self.components.get(nu, GrassmannPoly())
            b = other.components.get(nu, GrassmannPoly())
            for m in set(a.terms) | set(b.terms):
                worst = max(worst, abs(a[m] - b[m]))
        return worst


def commute_chi_state(nu: int, sign: int, params: StatParams) -> Phase:
    """Factor picked up when chi moves right past ``|nu>``: ``Q^{+-nu}``."""
    _check_sign(sign)
    _check_nu(nu, params)
    return params.Q ** (sign * nu)


def commute_chi_operators(m: int, sign: int, params: StatParams) -> Phase:
    """Factor in ``chi (a^+)^m = Q^{+-m} (a^+)^m chi`` and ``a^m chi = Q^{+-m} chi a^m``."""
    _check_sign(sign)
    if not 0 <= m <= params.n:
        raise ValueError(f"operator power {m} outside [0, {params.n}]")
    return params.Q ** (sign * m)


def gamma_coeff(nu: int, sign: int, params: StatParams) -> complex:
    """``prod_{m=0}^{nu-1} Q^{+-m} / sqrt([m+1])``.

    The bracket in the denominator runs one step ahead of the phase index;
    with ``[m]`` instead, the ``m = 0`` factor would be ``1/sqrt(0)``.
    """
    _check_sign(sign)
    _check_nu(nu, params)
    c = 1 + 0j
    for m in range(nu):
        c *= complex(params.Q ** (sign * m)) / sqrt_bracket(m + 1, params)
    return c


@dataclass(frozen=True)
class CoherentState:
    levels: tuple[complex, ...]
    normalization: GrassmannPoly
    sign: int
    params: StatParams

    def ket(self, truncate: bool = True) -> FormalKet:
        order = self.params.n + 1 if truncate else None
        return FormalKet({
            nu: GrassmannPoly.chi(order, nu) * c for nu, c in enumerate(self.levels)
        })


def _level_weights(levels) -> list[Fraction]:
    # |gamma|^2 pinned to exact binary fractions so the series algebra is exact
    return [Fraction((c * c.conjugate()).real) for c in levels]


def _levels(sign: int, params: StatParams) -> tuple[complex, ...]:
    return tuple(gamma_coeff(nu, sign, params) for nu in params.levels())


def normalization_M(sign: int, params: StatParams) -> GrassmannPoly:
    """``S^{-1/2}`` with ``S = sum_l |gamma(l)|^2 zeta^l``, truncated at ``zeta^{n+1}``."""
    weights = _level_weights(_levels(sign, params))
    order = params.n + 1
    return GrassmannPoly.zeta_series(series.inv_sqrt(weights, order), order)


def coherent_state(sign: int, params: StatParams) -> CoherentState:
    _check_sign(sign)
    levels = _levels(sign, params)
    return CoherentState(levels, normalization_M(sign, params), sign, params)


def eigen_residual(state: CoherentState, sign: int, params: StatParams,
                   truncate: bool = True) -> float:
    """Largest coefficient mismatch between ``b|chi>`` and ``chi|chi>``."""
    ket = state.ket(truncate)
    return ket.apply_b(params).max_mismatch(ket.chi_from_left(sign, params))


def norm_polynomial(state: CoherentState) -> GrassmannPoly:
    order = state.params.n + 1
    S = GrassmannPoly.zeta_series(_level_weights(state.levels), order)
    M = state.normalization
    return M * S * M


def inner_product_norm(sign: int, params: StatParams) -> GrassmannPoly:
    """``<chi|chi>`` as an element of the truncated algebra; should be exactly 1."""
    return norm_polynomial(coherent_state(sign, params))
