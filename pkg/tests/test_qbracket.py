import cmath
import math
from itertools import permutations

import numpy as np
import pytest
import sympy as sp

from isw.qbracket import (jacobi_diff_residual, jacobi_sum_residual, jacobi_trials,
                          qbracket, random_operator, random_triple)
from isw.statmap import StatParams


def test_symbolic_expansion_oracle():
    # both identities hold as noncommutative polynomials in u, v, w with free q
    u, v, w = sp.symbols("u v w", commutative=False)
    q = sp.Symbol("q")

    def br(x, y):
        return x * y - q * y * x

    even = [(u, v, w), (w, u, v), (v, w, u)]
    odd = [(v, u, w), (u, w, v), (w, v, u)]
    dbl = lambda t: br(br(t[0], t[1]), t[2])
    word = lambda t: t[0] * t[1] * t[2]
    lhs_sum = sum(dbl(t) for t in even + odd)
    rhs_sum = (1 - q) ** 2 * sum(word(t) for t in even + odd)
    assert sp.expand(lhs_sum - rhs_sum) == 0
    lhs_diff = sum(dbl(t) for t in even) - sum(dbl(t) for t in odd)
    rhs_diff = (1 - q ** 2) * (sum(word(t) for t in even) - sum(word(t) for t in odd))
    assert sp.expand(lhs_diff - rhs_diff) == 0


def test_qbracket_examples():
    p = StatParams(3)
    q = complex(p.Q)
    I = np.eye(3)
    assert np.allclose(qbracket(I, I, p), (1 - q) * I)
    assert np.allclose(qbracket([[2]], [[3]], p), [[(1 - q) * 6]])
    u, v = random_operator(4, 1), random_operator(4, 2)
    assert np.allclose(qbracket(u, v, StatParams(1)), u @ v + v @ u)
    with pytest.raises(ValueError):
        qbracket(np.eye(2), np.eye(3), p)
    with pytest.raises(ValueError):
        jacobi_sum_residual(np.eye(2), np.eye(2), np.eye(3), p)


def test_bilinearity_and_self_bracket():
    p = StatParams(5)
    q = complex(p.Q)
    u, u2, v = (random_operator(5, s) for s in (10, 11, 12))
    a, b = 0.3 - 1.2j, -0.7 + 0.1j
    assert np.linalg.norm(qbracket(a * u + b * u2, v, p)
                          - a * qbracket(u, v, p) - b * qbracket(u2, v, p)) < 1e-13
    assert np.linalg.norm(qbracket(v, a * u + b * u2, p)
                          - a * qbracket(v, u, p) - b * qbracket(v, u2, p)) < 1e-13
    assert np.linalg.norm(qbracket(u, u, p) - (1 - q) * u @ u) < 1e-14


def test_coefficient_reads_as_Q():
    for n in (1, 2, 3, 5, 8):
        p = StatParams(n, 3)
        ag = p.alpha * p.g
        coeff = cmath.exp(2j * math.pi * float(ag / (1 + ag)))
        assert abs(coeff - complex(p.Q)) < 1e-15
        assert ag / (1 + ag) == p.Q.r


def test_trivial_operands():
    p = StatParams(3)
    I = np.eye(4)
    assert jacobi_sum_residual(I, I, I, p) < 1e-15
    assert jacobi_diff_residual(I, I, I, p) == 0
    x, y, z = np.array([[0.5 + 0.2j]]), np.array([[-0.3j]]), np.array([[0.9]])
    assert jacobi_sum_residual(x, y, z, p) < 1e-15
    d1, d2, d3 = (np.diag(random_operator(4, s).diagonal()) for s in (1, 2, 3))
    assert jacobi_diff_residual(d1, d2, d3, p) < 1e-15


@pytest.mark.parametrize("n", [2, 3])
def test_random_4x4(n):
    p = StatParams(n)
    u, v, w = random_triple(4, 99, 0)
    assert jacobi_sum_residual(u, v, w, p) < 1e-12
    assert jacobi_diff_residual(u, v, w, p) < 1e-12


def test_swapped_coefficients_are_detected():
    # the check is sharp: trading (1 - Q^2) for (1 - Q)^2 leaves a visible residual
    p = StatParams(3)
    q = complex(p.Q)
    u, v, w = random_triple(3, 5, 0)
    lhs = np.zeros((3, 3), complex)
    words = np.zeros((3, 3), complex)
    for perm, sign in zip(permutations((u, v, w)), (1, -1, -1, 1, 1, -1)):
        x, y, z = perm
        lhs += sign * qbracket(qbracket(x, y, p), z, p)
        words += sign * (x @ y @ z)
    assert np.linalg.norm(lhs - (1 - q ** 2) * words) < 1e-12
    assert np.linalg.norm(lhs - (1 - q) ** 2 * words) > 1e-3


def test_random_operator_determinism():
    a = random_operator(1, 0)
    assert np.array_equal(a, random_operator(1, 0))
    assert np.array_equal(random_operator(4, 7), random_operator(4, 7))
    assert not np.array_equal(random_operator(4, 7), random_operator(4, 8))
    m = random_operator(6, 3)
    assert np.all(np.abs(m.real) <= 1) and np.all(np.abs(m.imag) <= 1)
    with pytest.raises(ValueError):
        random_operator(0, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_identities_over_random_triples(n):
    s, d = jacobi_trials(StatParams(n), trials=100, seed=2024)
    assert s < 1e-10 and d < 1e-10
