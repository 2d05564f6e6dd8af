"""Deformed bracket ``[u, v] = u v - Q v u`` and the two Jacobi-like identities."""
from __future__ import annotations

from itertools import permutations

import numpy as np

from .statmap import StatParams


def _check_same_shape(*ops: np.ndarray) -> None:
    shape = ops[0].shape
    if len(shape) != 2 or shape[0] != shape[1]:
        raise ValueError(f"operators must be square matrices, got shape {shape}")
    for op in ops[1:]:
        if op.shape != shape:
            raise ValueError(f"dimension mismatch: {op.shape} vs {shape}")


def qbracket(u: np.ndarray, v: np.ndarray, params: StatParams) -> np.ndarray:
    u, v = np.asarray(u, dtype=complex), np.asarray(v, dtype=complex)
    _check_same_shape(u, v)
    return u @ v - complex(params.Q) * (v @ u)


def _perm_sign(p: tuple[int, ...]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


# (u, v, w) orderings with their permutation parity
_ORDERINGS = [(p, _perm_sign(p)) for p in permutations(range(3))]


def _double_brackets(ops, params):
    """Yield ``([[x, y], z], sign, x y z)`` for all six orderings."""
    for p, sign in _ORDERINGS:
        x, y, z = (ops[i] for i in p)
        yield qbracket(qbracket(x, y, params), z, params), sign, x @ y @ z


def jacobi_sum_residual(u, v, w, params: StatParams) -> float:
    ops = [np.asarray(m, dtype=complex) for m in (u, v, w)]
    _check_same_shape(*ops)
    lhs = np.zeros_like(ops[0])
    words = np.zeros_like(ops[0])
    for dbl, _, word in _double_brackets(ops, params):
        lhs += dbl
        words += word
    rhs = (1 - complex(params.Q)) ** 2 * words
    return float(np.linalg.norm(lhs - rhs))


def jacobi_diff_residual(u, v, w, params: StatParams) -> float:
    ops = [np.asarray(m, dtype=complex) for m in (u, v, w)]
    _check_same_shape(*ops)
    lhs = np.zeros_like(ops[0])
    words = np.zeros_like(ops[0])
    for dbl, sign, word in _double_brackets(ops, params):
        lhs += sign * dbl
        words += sign * word
    rhs = (1 - complex(params.Q ** 2)) * words
    return float(np.linalg.norm(lhs - rhs))


def random_operator(dim: int, seed) -> np.ndarray:
    """Complex ``dim x dim`` matrix, real and imaginary parts uniform in [-1, 1].

    ``seed`` is anything ``numpy.random.default_rng`` accepts (an int or a
    sequence of ints).
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    rng = np.random.default_rng(seed)
    return rng.uniform(-1, 1, (dim, dim)) + 1j * rng.uniform(-1, 1, (dim, dim))


def random_triple(dim: int, seed: int, trial: int):
    return tuple(random_operator(dim, [seed, dim, trial, slot]) for slot in range(3))


def jacobi_trials(params: StatParams, trials: int, seed: int, dims=range(1, 9)):
    """Worst residual of each identity over ``trials`` random triples per dim."""
    worst_sum = worst_diff = 0.0
    for dim in dims:
        for t in range(trials):
            u, v, w = random_triple(dim, seed, t)
            worst_sum = max(worst_sum, jacobi_sum_residual(u, v, w, params))
            worst_diff = max(worst_diff, jacobi_diff_residual(u, v, w, params))
    return worst_sum, worst_diff
