"""Dense matrix representation of the deformed ladder operators on |0>..|n>."""
from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .statmap import Phase, StatParams, _check_nu

ARCCOS_TOL = 1e-12


def bracket_value(nu: int, params: StatParams) -> complex:
    """q-number ``(1 - Q^nu)/(1 - Q)`` for ``0 <= nu <= n+1``.

    Evaluated as ``e^{i pi (nu-1)/(n+1)} sin(pi nu/(n+1))/sin(pi/(n+1))``,
    which is the same quantity without the cancellation in ``1 - Q^nu``.
    """
    if not 0 <= nu <= params.n + 1:
        raise ValueError(f"bracket index {nu} outside [0, {params.n + 1}]")
    if nu == 0 or nu == params.n + 1:
        return 0j
    if nu == 1:
        return 1 + 0j
    m = params.n + 1
    modulus = math.sin(math.pi * nu / m) / math.sin(math.pi / m)
    return modulus * complex(Phase(Fraction(nu - 1, 2 * m)))


def bracket_value_direct(nu: int, params: StatParams) -> complex:
    """Same q-number from the literal quotient; used as a cross-check."""
    q = complex(params.Q)
    return (1 - complex(params.Q ** nu)) / (1 - q)


def sqrt_bracket(nu: int, params: StatParams) -> complex:
    # principal branch; arg([nu]) = pi (nu-1)/(n+1) stays inside (-pi, pi)
    return cmath.sqrt(bracket_value(nu, params))


def build_creation(params: StatParams) -> np.ndarray:
    """a-dagger: entries ``A[nu+1, nu] = sqrt([nu+1])``."""
    A = np.zeros((params.dim, params.dim), dtype=complex)
    for nu in range(params.n):
        A[nu + 1, nu] = sqrt_bracket(nu + 1, params)
    return A


def build_annihilation_b(params: StatParams) -> np.ndarray:
    """b: entries ``b[nu-1, nu] = sqrt([nu])``, the plain transpose of a-dagger."""
    Bm = np.zeros((params.dim, params.dim), dtype=complex)
    for nu in range(1, params.n + 1):
        Bm[nu - 1, nu] = sqrt_bracket(nu, params)
    return Bm


def build_conjugates(params: StatParams) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(a, b_dagger)`` with ``a = conj(b)`` entrywise."""
    b = build_annihilation_b(params)
    return b.conj(), b.conj().T


def deformed_commutator_residual(params: StatParams) -> float:
    """Frobenius norm of ``b a^+ - Q a^+ b - 1``."""
    b = build_annihilation_b(params)
    ad = build_creation(params)
    q = complex(params.Q)
    return float(np.linalg.norm(b @ ad - q * ad @ b - np.eye(params.dim)))


def conjugate_commutator_residual(params: StatParams) -> float:
    """Frobenius norm of ``a b^+ - conj(Q) b^+ a - 1`` (derived relation)."""
    a, bd = build_conjugates(params)
    q = complex(params.Q).conjugate()
    return float(np.linalg.norm(a @ bd - q * bd @ a - np.eye(params.dim)))


def basis_vector(nu: int, params: StatParams) -> np.ndarray:
    e = np.zeros(params.dim, dtype=complex)
    e[_check_nu(nu, params)] = 1
    return e


def build_state(nu: int, params: StatParams) -> np.ndarray:
    """``(a^+)^nu |0>`` divided by ``sqrt([1][2]...[nu])``.

    The root is taken factor by factor, on the same branch as the ladder
    matrix elements; the principal root of the whole product flips sign once
    its argument ``pi nu (nu-1) / (2(n+1))`` passes pi.
    """
    _check_nu(nu, params)
    ad = build_creation(params)
    v = basis_vector(0, params)
    root = 1 + 0j
    for level in range(1, nu + 1):
        v = ad @ v
        root *= sqrt_bracket(level, params)
    return v / root


def build_B_operator(params: StatParams) -> np.ndarray:
    """``b a^+ - a^+ b``; diagonal with entries ``Q^nu``."""
    b = build_annihilation_b(params)
    ad = build_creation(params)
    return b @ ad - ad @ b


def matrix_arccos(H: np.ndarray) -> np.ndarray:
    """arccos of a Hermitian matrix through its eigendecomposition."""
    w, V = np.linalg.eigh(H)
    if np.any(np.abs(w) > 1 + ARCCOS_TOL):
        raise ValueError(f"arccos argument outside [-1, 1]: {w}")
    return (V * np.arccos(np.clip(w, -1.0, 1.0))) @ V.conj().T


def number_operator(params: StatParams) -> np.ndarray:
    """``(1+alpha g)/(2 pi alpha g) * arccos((B + B^+)/2)``.

    arccos has range [0, pi], so levels above (n+1)/2 come back folded
    to ``n + 1 - nu``.

    B is unitary, so on each eigenvector v of ``(B + B^+)/2`` with eigenvalue
    w the arccos equals ``atan2(|K v|, w)`` where ``K = (B - B^+)/2i``. That
    form is used because arccos itself is ill-conditioned next to -1 and 1 (a
    1e-16 error there turns into 1e-8 in N), and ``|K v|`` does not care how
    the degenerate pairs ``Q^nu``, ``Q^{n+1-nu}`` are mixed by the eigensolver.
    """
    B = build_B_operator(params)
    H = (B + B.conj().T) / 2
    K = (B - B.conj().T) / 2j
    w, V = np.linalg.eigh(H)
    if np.any(np.abs(w) > 1 + ARCCOS_TOL):
        raise ValueError(f"arccos argument outside [-1, 1]: {w}")
    theta = np.arctan2(np.linalg.norm(K @ V, axis=0), w)
    ag = params.alpha * params.g
    prefactor = float((1 + ag) / ag) / (2 * math.pi)
    return prefactor * (V * theta) @ V.conj().T


def ideal_number_operator(params: StatParams) -> np.ndarray:
    return np.diag(np.arange(params.dim, dtype=float)).astype(complex)


def folded_level(nu: int, params: StatParams) -> int:
    """Level that the arccos form of N reports for occupation ``nu``."""
    return nu if 2 * nu <= params.n + 1 else params.n + 1 - nu
