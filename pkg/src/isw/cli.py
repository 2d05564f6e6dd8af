"""``isw`` command-line workbench."""
from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import berry, fockrep, grassmann, qbracket, statmap
from .report import Report, config_dict
from .statmap import StatParams

log = logging.getLogger("isw")

DEFAULT_TOL = 1e-10
VERIFY_NS = range(1, 17)
VERIFY_GS = (1, 2, 4)


@dataclass(frozen=True)
class RunConfig:
    n: int = 3
    g: int = 2
    sign: int = 1
    seed: int = 0
    trials: int = 100
    steps: int = 20000
    tol: float = DEFAULT_TOL
    format: str = "json"
    use_folded_number_operator: bool = False

    def __post_init__(self):
        if self.n < 1 or self.g < 1:
            raise ValueError("n and g must be >= 1")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.steps < berry.MIN_STEPS:
            raise ValueError(f"steps must be >= {berry.MIN_STEPS}")
        if not self.tol > 0:
            raise ValueError("tol must be > 0")
        if self.format not in ("json", "csv"):
            raise ValueError("format must be json or csv")

    @property
    def params(self) -> StatParams:
        return StatParams(self.n, self.g)


def _new_report(command: str, config: RunConfig) -> Report:
    return Report(command, config_dict(config), tol=config.tol)


# --- per-module checks, shared by the single commands and verify-all -------

def map_rows(params: StatParams) -> list[dict]:
    rows = []
    for nu in params.levels():
        k = statmap.nu_to_k(nu, params)
        lhs, rhs = statmap.phase_exponents(nu, params)
        rows.append({
            "nu": nu,
            "k": k,
            "phase": statmap.anyon_phase(k, params),
            "gentile_phase": statmap.gentile_phase(nu, params),
            "lhs_exponent": lhs,
            "rhs_exponent": rhs,
        })
    return rows


def fock_residuals(params: StatParams) -> dict[str, float]:
    n = params.n
    B = fockrep.build_B_operator(params)
    expected_B = np.diag([complex(params.Q ** nu) for nu in params.levels()])
    N = fockrep.number_operator(params)
    folded = np.diag([float(fockrep.folded_level(nu, params)) for nu in params.levels()])
    low = [nu for nu in params.levels() if 2 * nu <= n + 1]
    states = max(np.linalg.norm(fockrep.build_state(nu, params) - fockrep.basis_vector(nu, params))
                 for nu in params.levels())
    ad = fockrep.build_creation(params)
    return {
        "deformed_commutator": fockrep.deformed_commutator_residual(params),
        "conjugate_commutator": fockrep.conjugate_commutator_residual(params),
        "B_diagonal": float(np.linalg.norm(B - expected_B)),
        "number_operator_low_levels": float(np.max(np.abs(np.diag(N).real[low] - low))),
        "number_operator_fold": float(np.linalg.norm(N - folded)),
        "state_construction": float(states),
        "top_state_closure": float(np.linalg.norm(ad @ fockrep.basis_vector(n, params))),
    }


def coherent_residuals(sign: int, params: StatParams) -> dict[str, float]:
    state = grassmann.coherent_state(sign, params)
    norm = grassmann.norm_polynomial(state)
    unit = grassmann.GrassmannPoly.unit(params.n + 1)
    deviation = norm - unit
    return {
        "coherent_eigen": grassmann.eigen_residual(state, sign, params),
        "coherent_norm": float(max((abs(c) for c in deviation.terms.values()), default=0.0)),
    }


def berry_rows(params: StatParams, steps: int, folded: bool) -> list[dict]:
    rows = []
    for res in berry.berry_table(params, steps, folded):
        analytic = berry.berry_phase_analytic(res.nu, params)
        rows.append({
            "nu": res.nu,
            "eta_analytic": analytic,
            "eta_exponent": berry.berry_exponent(res.nu, params),
            "eta_numeric": res.eta,
            "difference": abs(res.eta - analytic),
            "eta_winding": berry.berry_phase_winding(statmap.nu_to_k(res.nu, params), params),
            "k_restricted": res.k_restricted,
        })
    return rows


# --- commands ----------------------------------------------------------------

def cmd_map(config: RunConfig) -> Report:
    params = config.params
    report = _new_report("map", config)
    report.rows = map_rows(params)
    report.residuals["phase_equality"] = statmap.phase_equality_residual(params)
    exact = all(r["lhs_exponent"] == r["rhs_exponent"] for r in report.rows)
    report.residuals["exponent_mismatch"] = 0.0 if exact else 1.0
    return report


def cmd_fock(config: RunConfig) -> Report:
    params = config.params
    report = _new_report("fock", config)
    B = np.diag(fockrep.build_B_operator(params))
    N = np.diag(fockrep.number_operator(params)).real
    for nu in params.levels():
        report.rows.append({
            "label": "level",
            "nu": nu,
            "bracket": fockrep.bracket_value(nu, params),
            "B_eigenvalue": B[nu],
            "N_folded": float(N[nu]),
            "N_ideal": nu,
            "folded": bool(abs(N[nu] - nu) > 0.5),
        })
    a, b_dagger = fockrep.build_conjugates(params)
    for label, matrix in (("creation", fockrep.build_creation(params)),
                          ("annihilation_b", fockrep.build_annihilation_b(params)),
                          ("a", a), ("b_dagger", b_dagger)):
        report.rows.append({"label": label, "matrix": matrix})
    report.residuals.update(fock_residuals(params))
    return report


def cmd_jacobi(config: RunConfig) -> Report:
    params = config.params
    report = _new_report("jacobi", config)
    for dim in range(1, 9):
        s, d = qbracket.jacobi_trials(params, config.trials, config.seed, dims=[dim])
        report.rows.append({"dim": dim, "trials": config.trials,
                            "jacobi_sum": s, "jacobi_diff": d})
        report.worst("jacobi_sum", s)
        report.worst("jacobi_diff", d)
    return report


def cmd_coherent(config: RunConfig) -> Report:
    params, sign = config.params, config.sign
    report = _new_report("coherent", config)
    state = grassmann.coherent_state(sign, params)
    M = state.normalization.zeta_coefficients()
    norm = grassmann.norm_polynomial(state).zeta_coefficients()
    for nu, c in enumerate(state.levels):
        report.rows.append({
            "nu": nu,
            "gamma": c,
            "lambda": grassmann.commute_chi_state(nu, sign, params),
            "M_coefficient": M[nu] if nu < len(M) else 0,
            "norm_coefficient": norm[nu] if nu < len(norm) else 0,
        })
    report.rows.append({
        "label": "untruncated_control",
        "eigen_mismatch": grassmann.eigen_residual(state, sign, params, truncate=False),
    })
    report.residuals.update(coherent_residuals(sign, params))
    return report


def cmd_berry(config: RunConfig) -> Report:
    params = config.params
    report = _new_report("berry", config)
    report.rows = berry_rows(params, config.steps, config.use_folded_number_operator)
    report.rows.append({"label": "winding_restriction",
                        "k": berry.winding_restriction(params)})
    report.worst("berry_numeric", max(r["difference"] for r in report.rows[:-1]))
    report.worst("berry_winding", max(abs(r["eta_winding"] - r["eta_analytic"])
                                      for r in report.rows[:-1]))
    report.residuals["restriction_phase"] = float(len(berry.restriction_phase_mismatch(params)))
    return report


def cmd_verify_all(config: RunConfig) -> Report:
    """Every residual check over n = 1..16, g in {1, 2, 4} and both signs.

    The Berry loop is checked through the Richardson combination of
    ``steps`` and ``2*steps``; a bare central difference cannot reach a
    1e-10 tolerance at any practical step count.
    """
    report = _new_report("verify-all", config)
    jacobi_cache = {}
    for n in VERIFY_NS:
        for g in VERIFY_GS:
            params = StatParams(n, g)
            cell = {"phase_equality": statmap.phase_equality_residual(params)}
            cell.update(fock_residuals(params))
            # the bracket depends on n only, through Q
            if n not in jacobi_cache:
                jacobi_cache[n] = qbracket.jacobi_trials(params, config.trials, config.seed)
            cell["jacobi_sum"], cell["jacobi_diff"] = jacobi_cache[n]
            for sign in (1, -1):
                for name, value in coherent_residuals(sign, params).items():
                    cell[name] = max(cell.get(name, 0.0), value)
            cell["berry_richardson"] = max(
                abs(berry.berry_phase_richardson(nu, params, config.steps,
                                                 config.use_folded_number_operator)
                    - berry.berry_phase_analytic(nu, params))
                for nu in params.levels())
            cell["berry_winding"] = max(
                abs(berry.berry_phase_winding(statmap.nu_to_k(nu, params), params)
                    - berry.berry_phase_analytic(nu, params))
                for nu in params.levels())
            cell["restriction_phase"] = float(len(berry.restriction_phase_mismatch(params)))
            report.rows.append({"n": n, "g": g, **cell})
            for name, value in cell.items():
                report.worst(name, value)
    return report


COMMANDS = {
    "map": cmd_map,
    "fock": cmd_fock,
    "jacobi": cmd_jacobi,
    "coherent": cmd_coherent,
    "berry": cmd_berry,
    "verify-all": cmd_verify_all,
}


def _sign(text: str) -> int:
    table = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}
    if text not in table:
        raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")
    return table[text]


def _default_tol() -> float:
    raw = os.environ.get("ISW_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise SystemExit(f"isw: error: ISW_TOL={raw!r} is not a number") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isw",
        description="Anyon/Gentile intermediate-statistics verification workbench.",
    )
    parser.add_argument("command", choices=list(COMMANDS))
    parser.add_argument("--n", type=int, default=RunConfig.n, help="maximum occupation")
    parser.add_argument("--g", type=int, default=RunConfig.g, help="braiding closure count")
    parser.add_argument("--sign", type=_sign, default=1, help="'+' or '-' branch")
    parser.add_argument("--seed", type=int, default=RunConfig.seed)
    parser.add_argument("--trials", type=int, default=RunConfig.trials)
    parser.add_argument("--steps", type=int, default=RunConfig.steps)
    parser.add_argument("--tol", type=float, default=None,
                        help=f"residual tolerance (default $ISW_TOL or {DEFAULT_TOL})")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--folded-n", action="store_true", dest="folded",
                        help="use the arccos number operator for J_z in the Berry loop")
    return parser


def parse_config(argv=None) -> tuple[str, RunConfig]:
    parser = build_parser()
    args = parser.parse_args(argv)
    tol = args.tol if args.tol is not None else _default_tol()
    try:
        config = RunConfig(n=args.n, g=args.g, sign=args.sign, seed=args.seed,
                           trials=args.trials, steps=args.steps, tol=tol,
                           format=args.format, use_folded_number_operator=args.folded)
    except ValueError as exc:
        parser.error(str(exc))
    return args.command, config


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="isw: %(message)s", stream=sys.stderr)
    command, config = parse_config(argv)
    start = time.perf_counter()
    report = COMMANDS[command](config)
    log.info("%s finished in %.2f s, passed=%s", command, time.perf_counter() - start,
             report.passed)
    sys.stdout.write(report.render(config.format))
    sys.stdout.write("\n")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
