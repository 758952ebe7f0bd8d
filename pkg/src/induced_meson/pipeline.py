"""Single-point pipeline and sigma scans."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .condensates import Condensates, condensates_forward
from .errors import DomainError, ModelError
from .params import ModelParams, is_valid, running_scale, validate_params
from .spectrum import SpectrumReport, compute_spectrum
from .vacuum import CubicCoefficients, VacuumSolution, cubic_coefficients, find_vacuum, scaled_potential, vacuum_closed_form_sigma0

# a step is flagged as a branch switch when it exceeds this multiple of its neighbours
CONTINUITY_FACTOR = 10.0


class Spacing(str, enum.Enum):
    LINEAR = "linear"
    LOG = "log"


@dataclass(frozen=True)
class GridSpec:
    sigma_min: float
    sigma_max: float
    n: int
    spacing: Spacing = Spacing.LINEAR

    def points(self) -> list[float]:
        if self.n < 2:
            raise DomainError(f"scan needs n >= 2, got {self.n}")
        if not (0.0 <= self.sigma_min <= self.sigma_max):
            raise DomainError(f"need 0 <= sigma_min <= sigma_max, got {self.sigma_min}, {self.sigma_max}")
        if self.spacing is Spacing.LOG:
            if self.sigma_min <= 0.0:
                raise DomainError("log spacing needs sigma_min > 0")
            pts = np.geomspace(self.sigma_min, self.sigma_max, self.n)
        else:
            pts = np.linspace(self.sigma_min, self.sigma_max, self.n)
        return [float(x) for x in pts]


@dataclass
class PointReport:
    params: ModelParams
    sigma: float
    mu: float | None = None
    condensates: Condensates | None = None
    cubic: CubicCoefficients | None = None
    vacuum: VacuumSolution | None = None
    spectrum: SpectrumReport | None = None
    warnings: list[str] = field(default_factory=list)
    status: str = "ok"
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"


@dataclass
class ScanTable:
    params: ModelParams
    grid: GridSpec
    rows: list[PointReport]
    diagnostics: dict = field(default_factory=dict)


def run_point(
    params: ModelParams,
    sigma: float,
    m_0A: float = 0.0,
    composite_a: bool = False,
    closed_form: bool = True,
) -> PointReport:
    """Condensates, cubic, vacuum and spectrum at one running scale.

    Raises the underlying :class:`ModelError` (with the point in the
    message) when any stage fails.
    """
    report = validate_params(params)
    basic = [r for r in report if "m_asym < lambda_cut" not in r and not r.startswith("info:")]
    try:
        if basic:
            raise DomainError("; ".join(basic))
        if sigma == 0.0 and params.derived:
            vacuum_closed_form_sigma0(params)
        if not is_valid(report):
            raise DomainError("; ".join(report))
        rp = running_scale(params, sigma)
        cond = condensates_forward(params.n_c, params.lambda_cut, params.m_asym)
        cubic = cubic_coefficients(params, cond.c_q, sigma)
        vac = find_vacuum(params, sigma, cond.c_q, closed_form=closed_form)
        pot = scaled_potential(params, sigma, cond.c_q)
        spec = compute_spectrum(params, sigma, vac.phi0, pot, m_0A, composite_a)
    except ModelError as exc:
        exc.args = (f"sigma={sigma!r}: {exc.args[0] if exc.args else exc}",) + tuple(exc.args[1:])
        raise
    warns = list(vac.warnings) + [r for r in report if r.startswith("info:")]
    return PointReport(
        params=params,
        sigma=sigma,
        mu=rp.mu,
        condensates=cond,
        cubic=cubic,
        vacuum=vac,
        spectrum=spec,
        warnings=warns,
    )


def _failed(params, sigma, exc):
    return PointReport(params=params, sigma=sigma, status=exc.code, error=str(exc))


def scan_diagnostics(rows: list[PointReport]) -> dict:
    """Branch continuity of phi0 and monotonic decrease of m_phi along the scan."""
    good = [r for r in rows if r.ok]
    sig = [r.sigma for r in good]
    phi = [r.vacuum.phi0 for r in good]
    mphi = [r.spectrum.m_phi for r in good]
    jumps = []
    steps = np.abs(np.diff(phi))
    for i, d in enumerate(steps):
        neigh = [steps[j] for j in (i - 1, i + 1) if 0 <= j < len(steps)]
        if neigh and d > CONTINUITY_FACTOR * max(neigh) + 1e-12 * max(1.0, abs(phi[i])):
            jumps.append({"sigma_from": sig[i], "sigma_to": sig[i + 1], "step": float(d)})
    violations = [
        {"sigma_from": sig[i], "sigma_to": sig[i + 1], "m_phi_from": mphi[i], "m_phi_to": mphi[i + 1]}
        for i in range(len(mphi) - 1)
        if not mphi[i + 1] < mphi[i]
    ]
    return {
        "n_ok": len(good),
        "n_failed": len(rows) - len(good),
        "phi0_continuous": not jumps,
        "phi0_jumps": jumps,
        "m_phi_strictly_decreasing": not violations,
        "m_phi_monotonicity_findings": violations,
    }


def run_scan(
    params: ModelParams, grid: GridSpec, m_0A: float = 0.0, composite_a: bool = False
) -> ScanTable:
    """Run every grid point; failures become rows with an error status."""
    rows = []
    for sigma in grid.points():
        try:
            rows.append(run_point(params, sigma, m_0A, composite_a))
        except ModelError as exc:
            rows.append(_failed(params, sigma, exc))
    return ScanTable(params=params, grid=grid, rows=rows, diagnostics=scan_diagnostics(rows))
