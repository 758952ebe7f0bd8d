"""Invariant suite run by ``induced-meson validate``.

Each check compares a closed-form result with an independent numerical
route (finite differences, brute-force minimization, round trips).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .condensates import condensates_forward, condensates_invert, forward_jacobian
from .errors import ModelError
from .params import ModelParams, is_valid, validate_params, xi_factor
from .pipeline import GridSpec, run_point, run_scan
from .potential import potential_derivatives, potential_value, singlet_potential
from .spectrum import axial_coupling_shift, axial_quadratic_check, scalar_mass_hessian_oracle
from .vacuum import (
    cubic_coefficients,
    scaled_potential,
    vacuum_closed_form_m0,
    vacuum_closed_form_sigma0,
    vacuum_oracle_grid,
)

STANDARD_LAMBDAS = (0.5, 1.0, 2.0)
STANDARD_M_RATIOS = (0.0, 0.1, 0.3, 0.5)
STANDARD_SIGMAS = (0.01, 0.1, 0.5, 1.0, 2.0)


def standard_params(n_c: int = 3) -> list[ModelParams]:
    return [ModelParams(n_c, lam, r * lam) for lam in STANDARD_LAMBDAS for r in STANDARD_M_RATIOS]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    informational: bool = False

    def line(self) -> str:
        tag = "PASS" if self.passed else ("INFO" if self.informational else "FAIL")
        return f"{tag:4s}  {self.name}  {self.detail}".rstrip()


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def _fd_jacobian(n_c, lam, m):
    out = np.empty((2, 2))
    for j, (dl, dm) in enumerate(((1.0, 0.0), (0.0, 1.0))):
        h = 1e-6 * lam
        cp = condensates_forward(n_c, lam + h * dl, m + h * dm)
        cm = condensates_forward(n_c, lam - h * dl, m - h * dm)
        out[:, j] = [(cp.c_q - cm.c_q) / (2 * h), (cp.c_g - cm.c_g) / (2 * h)]
    return out


def check_params(params, sigmas):
    results = []
    report = validate_params(params)
    results.append(CheckResult("params.valid", is_valid(report), "; ".join(report)))
    worst = 0.0
    mono = True
    for n in (1, 2, 3):
        grid = np.linspace(0.01, 5.0, 200)
        vals = [xi_factor(n, s) for s in grid]
        mono &= all(0.0 < v < 1.0 for v in vals) and all(np.diff(vals) < 0)
        for s in np.geomspace(1e-8, 50.0, 60):
            worst = max(worst, _rel(n * s * xi_factor(n, s), -math.expm1(-n * s)))
    results.append(CheckResult("xi.bounds_and_decrease", bool(mono)))
    results.append(CheckResult("xi.identity", worst < 1e-14, f"max rel {worst:.2e}"))
    return results


def check_condensates(params):
    n_c, lam, m = params.n_c, params.lambda_cut, params.m_asym
    results = []
    try:
        back = condensates_invert(n_c, condensates_forward(n_c, lam, m))
        err = max(_rel(back[0], lam), abs(back[1] - m) / lam)
        results.append(CheckResult("condensates.round_trip", err < 1e-8, f"rel {err:.2e}"))
    except ModelError as exc:
        results.append(CheckResult("condensates.round_trip", False, str(exc)))
    jac = forward_jacobian(n_c, lam, m)
    err = float(np.max(np.abs(jac - _fd_jacobian(n_c, lam, m))) / np.max(np.abs(jac)))
    results.append(CheckResult("condensates.jacobian_fd", err < 1e-6, f"rel {err:.2e}"))
    return results


def check_point(params, sigma):
    """Vacuum, potential derivative and spectrum checks at one sigma."""
    name = f"[sigma={sigma:g}]"
    results = []
    try:
        row = run_point(params, sigma)
    except ModelError as exc:
        return [CheckResult(f"point.solve {name}", False, str(exc))]
    phi0 = row.vacuum.phi0
    cubic = row.cubic
    results.append(CheckResult(
        f"vacuum.residual {name}", row.vacuum.residual < 1e-10 * cubic.scale, f"{row.vacuum.residual:.2e}"))
    results.append(CheckResult(f"vacuum.curvature {name}", row.vacuum.curvature > 0.0))

    pot = singlet_potential(params, sigma)
    oracle = vacuum_oracle_grid(scaled_potential(params, sigma), 3.0 * params.lambda_cut, 10**5)
    err = _rel(oracle, phi0)
    results.append(CheckResult(f"vacuum.grid_oracle {name}", err < 1e-8, f"rel {err:.2e}"))

    if params.m_asym == 0.0:
        err = _rel(phi0, vacuum_closed_form_m0(params, sigma))
        results.append(CheckResult(f"vacuum.closed_form_m0 {name}", err < 1e-12, f"rel {err:.2e}"))
        r = row.spectrum.m_phi / row.spectrum.m_psi
        results.append(CheckResult(f"spectrum.m_phi_2m_psi {name}", abs(r - 2.0) < 1e-12, f"ratio {r!r}"))

    worst = 0.0
    c = pot.coeffs
    for s in (0.5, 1.0, 2.0):
        s = s * params.lambda_cut
        d1, d2 = potential_derivatives(pot, s)
        # normalise by the term magnitudes; the derivatives themselves may vanish
        t1 = 4 * c.mu2 * s + 4 * c.lam * s**3 + 2 * abs(c.c_lin) + 6 * abs(c.c_cub) * s**2
        t2 = 4 * c.mu2 + 12 * c.lam * s**2 + 12 * abs(c.c_cub) * s
        h = 1e-5 * s
        fd1 = (potential_value(pot, s + h) - potential_value(pot, s - h)) / (2 * h)
        h2 = 1e-4 * s
        fd2 = (potential_value(pot, s + h2) - 2 * potential_value(pot, s) + potential_value(pot, s - h2)) / h2**2
        worst = max(worst, abs(fd1 - d1) / t1, abs(fd2 - d2) / t2)
    results.append(CheckResult(f"potential.derivatives_fd {name}", worst < 1e-6, f"rel {worst:.2e}"))

    worst = 0.0
    co = cubic_coefficients(params, None, sigma)
    lam = pot.coeffs.lam
    for s in np.linspace(0.1, 3.0, 10) * params.lambda_cut:
        d1, _ = potential_derivatives(pot, float(s))
        worst = max(worst, abs(d1 / (4 * lam) - co(float(s))) / max(1.0, abs(co(float(s)))))
    results.append(CheckResult(f"potential.cubic_identity {name}", worst < 1e-12, f"{worst:.2e}"))

    m_phi = row.spectrum.m_phi
    hess = scalar_mass_hessian_oracle(params, sigma, phi0, pot)
    err = _rel(hess, m_phi)
    results.append(CheckResult(
        f"spectrum.mass_curvature {name}", err < 1e-6 or not params.derived, f"rel {err:.2e}",
        informational=not params.derived))
    res = axial_quadratic_check(params, sigma, phi0)
    results.append(CheckResult(
        f"spectrum.axial_quadratic {name}", res < 1e-10 or not params.derived, f"rel {res:.2e}",
        informational=not params.derived))
    z = row.spectrum.z_phi
    results.append(CheckResult(f"spectrum.kinetic_positive {name}", z > 0.0, f"Z={z:.3e}"))
    ok = row.spectrum.delta_V == axial_coupling_shift(params, sigma) == lam / 3.0 and math.isclose(
        row.spectrum.delta_mA2 / m_phi**2, lam / 3.0, rel_tol=1e-14)
    results.append(CheckResult(f"spectrum.delta_A_equals_delta_V {name}", ok))
    return results


def check_limits(params):
    results = []
    try:
        row0 = run_point(params, 0.0)
        if params.derived:
            exact = vacuum_closed_form_sigma0(params)
            err0 = _rel(row0.vacuum.phi0, exact)
            results.append(CheckResult("limit.sigma0_exact", err0 < 1e-12, f"rel {err0:.2e}"))
        else:
            exact = row0.vacuum.phi0
        row = run_point(params, 1e-6, closed_form=False)
        err = _rel(row.vacuum.phi0, exact)
        results.append(CheckResult("limit.sigma_small_vacuum", err < 1e-6, f"rel {err:.2e}"))
        if params.derived:
            err = _rel(row.spectrum.m_phi**2, 12.0 * params.lambda_cut**2)
            results.append(CheckResult("limit.sigma_small_mass", err < 1e-6, f"rel {err:.2e}"))
        results.append(CheckResult("limit.kinetic_zero", row0.spectrum.z_phi == 0.0))
        results.append(CheckResult("limit.axial_shift_zero", row0.spectrum.delta_mA2 == 0.0))
    except ModelError as exc:
        results.append(CheckResult("limit.sigma0", False, str(exc)))
    return results


def check_running(params):
    table = run_scan(params, GridSpec(0.0, 2.0, 21))
    diag = table.diagnostics
    results = [
        CheckResult("scan.no_failures", diag["n_failed"] == 0, f"{diag['n_failed']} failed"),
        CheckResult("scan.phi0_continuous", diag["phi0_continuous"]),
        # the decrease of m_phi is asserted without proof; a violation is a finding
        CheckResult("scan.m_phi_decreasing", diag["m_phi_strictly_decreasing"],
                    f"{len(diag['m_phi_monotonicity_findings'])} findings", informational=True),
    ]
    first = table.rows[0]
    if first.ok:
        expected = 2.0 * (first.vacuum.phi0 + params.m_asym)
        err = _rel(first.spectrum.m_phi, expected)
        results.append(CheckResult(
            "scan.m_phi_at_sigma0", err < 1e-12, f"rel {err:.2e}", informational=not params.derived))
    return results


def validate_model(params: ModelParams, sigmas=STANDARD_SIGMAS) -> list[CheckResult]:
    label = f"(n_c={params.n_c}, lambda={params.lambda_cut:g}, m={params.m_asym:g})"
    results = check_params(params, sigmas)
    if is_valid(validate_params(params)):
        results += check_condensates(params)
        for sigma in sigmas:
            results += check_point(params, sigma)
        results += check_limits(params)
        results += check_running(params)
    for r in results:
        r.name = f"{r.name} {label}"
    return results


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.passed or r.informational for r in results)
