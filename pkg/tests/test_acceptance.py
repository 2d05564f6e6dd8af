"""Exit criteria, one check per line of the acceptance list.

Run ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or ``python tests/test_acceptance.py``.
"""
import json
import math
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from isw import berry, fockrep, grassmann, qbracket, statmap
from isw.statmap import StatParams

RESULTS = {}


def c1_deformed_commutator():
    start = time.perf_counter()
    worst = max(fockrep.deformed_commutator_residual(StatParams(n, g))
                for n in range(1, 65) for g in (1, 2, 4, 8))
    elapsed = time.perf_counter() - start
    return worst < 1e-12 and elapsed < 5, f"max residual {worst:.2e}, {elapsed:.2f} s"


def c2a_fermi_limit():
    p = StatParams(1, 2)
    A, b = fockrep.build_creation(p), fockrep.build_annihilation_b(p)
    anti = float(np.linalg.norm(b @ A + A @ b - np.eye(2)))
    k = statmap.nu_to_k(1, p)
    lhs = complex(statmap.anyon_phase(k, p))
    lhs_e, rhs_e = statmap.phase_exponents(1, p)
    rhs = complex(statmap.Phase(rhs_e))
    ok = anti < 1e-15 and lhs == -1 and rhs == -1 and lhs_e == rhs_e
    return ok, f"anticommutator residual {anti:.1e}, both sides {lhs}, {rhs}"


def c2b_bose_trend():
    p = StatParams(64)
    gaps = {nu: abs(fockrep.bracket_value(nu, p) - nu) for nu in range(1, 9)}
    bad = [nu for nu, gap in gaps.items() if not gap < 10 * nu / 64]
    return not bad, "|[nu] - nu| vs 10 nu/64: " + ", ".join(
        f"{nu}:{gaps[nu]:.3f}/{10 * nu / 64:.3f}" for nu in gaps)


def c3_phase_equality():
    worst = 0.0
    exact = True
    for n in range(1, 65):
        for g in range(1, 9):
            p = StatParams(n, g)
            for nu in range(n + 1):
                lhs, rhs = statmap.phase_exponents(nu, p)
                exact &= lhs == rhs == Fraction(nu, 2 * n)
            worst = max(worst, statmap.phase_equality_residual(p))
    return exact and worst < 1e-14, f"exact={exact}, complex residual {worst:.1e}"


def c4_jacobi():
    start = time.perf_counter()
    worst = 0.0
    for n in (1, 2, 3, 5, 8):
        worst = max(worst, *qbracket.jacobi_trials(StatParams(n), trials=100, seed=20240))
    elapsed = time.perf_counter() - start
    return worst < 1e-10 and elapsed < 10, f"max residual {worst:.2e} over 4000 triples, {elapsed:.2f} s"


def _number_oracle(n):
    H = np.diag([math.cos(2 * math.pi * nu / (n + 1)) for nu in range(n + 1)])
    w, V = np.linalg.eigh(H)
    return np.diag((V * np.arccos(np.clip(w, -1, 1))) @ V.T) * (n + 1) / (2 * math.pi)


def c5_number_operator():
    worst_low = worst_fold = worst_oracle = 0.0
    for n in range(1, 33):
        p = StatParams(n)
        got = np.diag(fockrep.number_operator(p)).real
        for nu in range(n + 1):
            if 2 * nu <= n + 1:
                worst_low = max(worst_low, abs(got[nu] - nu))
            else:
                worst_fold = max(worst_fold, abs(got[nu] - (n + 1 - nu)))
        worst_oracle = max(worst_oracle, float(np.max(np.abs(got - _number_oracle(n)))))
    ok = worst_low < 1e-12 and worst_fold < 1e-12 and worst_oracle < 1e-9
    return ok, (f"low levels {worst_low:.1e}, folded levels {worst_fold:.1e}, "
                f"vs oracle {worst_oracle:.1e}; n=3 spectrum "
                f"{np.round(np.diag(fockrep.number_operator(StatParams(3))).real, 12).tolist()}")


def c6_coherent_state():
    worst = 0.0
    norms_exact = True
    for n in range(1, 17):
        p = StatParams(n)
        for sign in (1, -1):
            state = grassmann.coherent_state(sign, p)
            worst = max(worst, grassmann.eigen_residual(state, sign, p))
            norms_exact &= grassmann.inner_product_norm(sign, p) == grassmann.GrassmannPoly.unit()
    control = grassmann.eigen_residual(grassmann.coherent_state(1, StatParams(4)), 1,
                                       StatParams(4), truncate=False)
    ok = worst <= 1e-13 and norms_exact and control > 0
    return ok, f"eigen {worst:.1e}, norm exact={norms_exact}, untruncated control {control:.3f}"


def c7a_berry_numeric():
    worst, where = 0.0, None
    for n in range(1, 17):
        p = StatParams(n)
        for nu in range(n + 1):
            err = abs(berry.berry_phase_numeric(nu, p, 10**4) - berry.berry_phase_analytic(nu, p))
            if err > worst:
                worst, where = err, (n, nu)
    return worst < 1e-6, f"max |numeric - analytic| {worst:.2e} at (n, nu)={where}"


def c7b_berry_convergence():
    ratios = []
    for n, nu in ((3, 0), (8, 2), (16, 16)):
        p = StatParams(n)
        exact = berry.berry_phase_analytic(nu, p)
        errs = [abs(berry.berry_phase_numeric(nu, p, s) - exact) for s in (1000, 2000, 4000)]
        ratios += [errs[1] / errs[0], errs[2] / errs[1]]
    ok = all(abs(r - 0.25) < 1e-3 for r in ratios)
    return ok, "error ratios " + ", ".join(f"{r:.5f}" for r in ratios)


def c7c_restriction_example():
    ks = berry.winding_restriction(StatParams(3, 2))
    return ks == [-9, -3, 3, 9], f"k = {[str(k) for k in ks]}"


def c8_verify_all():
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "isw.cli", "verify-all"],
                          capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    passed = json.loads(proc.stdout)["passed"]
    return proc.returncode == 0 and passed and elapsed < 60, \
        f"exit {proc.returncode}, {elapsed:.1f} s"


CRITERIA = [
    ("1 deformed commutator", c1_deformed_commutator),
    ("2a Fermi limit", c2a_fermi_limit),
    ("2b Bose trend |[nu]-nu| < 10nu/64", c2b_bose_trend),
    ("3 phase-factor equality", c3_phase_equality),
    ("4 Jacobi-like identities", c4_jacobi),
    ("5 number operator", c5_number_operator),
    ("6 coherent state", c6_coherent_state),
    ("7a Berry numeric within 1e-6 at 1e4 steps", c7a_berry_numeric),
    ("7b Berry second-order convergence", c7b_berry_convergence),
    ("7c Berry restricted windings n=3 g=2", c7c_restriction_example),
    ("8 verify-all end to end", c8_verify_all),
]


@pytest.mark.parametrize("name, check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check):
    ok, detail = check()
    RESULTS[name] = (ok, detail)
    assert ok, f"{name}: {detail}"


if __name__ == "__main__":
    failures = 0
    for name, check in CRITERIA:
        ok, detail = check()
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    sys.exit(1 if failures else 0)
