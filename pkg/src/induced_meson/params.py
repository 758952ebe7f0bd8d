"""Model inputs and the sigma-dependent running factors."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError

#: below this value of n*sigma the running factor is evaluated by its Taylor series
XI_SERIES_THRESHOLD = 1e-6
FPI_REL_TOL = 1e-12


class FPiMode(str, enum.Enum):
    DERIVED = "derived"
    OVERRIDE = "override"


def xi_factor(n: int, sigma: float) -> float:
    """Running factor ``(1 - exp(-n*sigma)) / (n*sigma)``.

    Equal to 1 at ``sigma = 0`` and decreasing towards 0 for large sigma.
    """
    if n not in (1, 2, 3):
        raise DomainError(f"xi_factor: n must be 1, 2 or 3, got {n!r}")
    if not sigma >= 0.0:
        raise DomainError(f"xi_factor: sigma must be >= 0, got {sigma!r}")
    x = n * sigma
    if x < XI_SERIES_THRESHOLD:
        return 1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0
    return -math.expm1(-x) / x


@dataclass(frozen=True)
class XiFactors:
    xi1: float
    xi2: float
    xi3: float

    @classmethod
    def at(cls, sigma: float) -> "XiFactors":
        return cls(xi_factor(1, sigma), xi_factor(2, sigma), xi_factor(3, sigma))


def derive_fpi(n_c: int, lambda_cut: float, m_asym: float) -> float:
    """Pion decay constant fixed by the compositeness scale and asymmetry.

    ``F_pi**2 = n_c * (lambda_cut**2 - m_asym**2) / (4 pi**2)``. This is the
    only choice for which the closed-form scalar mass agrees with the
    curvature of the potential.
    """
    if not (lambda_cut > m_asym >= 0.0):
        raise DomainError(
            f"derive_fpi needs lambda_cut > m_asym >= 0, got lambda_cut={lambda_cut!r}, m_asym={m_asym!r}"
        )
    return math.sqrt(n_c * (lambda_cut - m_asym) * (lambda_cut + m_asym) / (4.0 * math.pi**2))


@dataclass(frozen=True)
class ModelParams:
    """Physical inputs of the model, energies in GeV.

    Leave ``f_pi`` as ``None`` to derive it from ``(lambda_cut, m_asym)``;
    passing a value switches to override mode. In derived mode with
    ``m_asym >= lambda_cut`` the derived ``f_pi`` is NaN and
    :func:`validate_params` reports the violation.
    """

    n_c: int = 3
    lambda_cut: float = 1.0
    m_asym: float = 0.0
    f_pi: float | None = None
    f_pi_mode: FPiMode = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        mode = self.f_pi_mode
        if mode is None:
            mode = FPiMode.DERIVED if self.f_pi is None else FPiMode.OVERRIDE
        mode = FPiMode(mode)
        object.__setattr__(self, "f_pi_mode", mode)
        if mode is FPiMode.DERIVED:
            try:
                fpi = derive_fpi(self.n_c, self.lambda_cut, self.m_asym)
            except DomainError:
                fpi = float("nan")
            object.__setattr__(self, "f_pi", fpi)
        elif self.f_pi is None:
            raise DomainError("override mode requires an explicit f_pi")
        else:
            object.__setattr__(self, "f_pi", float(self.f_pi))

    @property
    def derived(self) -> bool:
        return self.f_pi_mode is FPiMode.DERIVED

    def as_dict(self) -> dict:
        return {
            "n_c": self.n_c,
            "lambda_cut": self.lambda_cut,
            "m_asym": self.m_asym,
            "f_pi": self.f_pi,
            "f_pi_mode": self.f_pi_mode.value,
        }


@dataclass(frozen=True)
class RunningPoint:
    sigma: float
    mu: float


def running_scale(params: ModelParams, sigma: float) -> RunningPoint:
    if not sigma >= 0.0:
        raise DomainError(f"sigma must be >= 0, got {sigma!r}")
    return RunningPoint(sigma=sigma, mu=params.lambda_cut * math.exp(-sigma))


def validate_params(params: ModelParams) -> list[str]:
    """List the violated invariants of ``params``; empty when valid.

    Entries starting with ``"info:"`` are informational and do not make the
    parameters invalid.
    """
    report = []
    if not (isinstance(params.n_c, int) and params.n_c > 0):
        report.append("n_c positive integer violated")
    if not params.lambda_cut > 0.0:
        report.append("lambda_cut > 0 violated")
    if not params.m_asym >= 0.0:
        report.append("m_asym >= 0 violated")
    if not params.m_asym < params.lambda_cut:
        report.append("m_asym < lambda_cut violated")
    if params.derived:
        if report:
            return report
        expected = derive_fpi(params.n_c, params.lambda_cut, params.m_asym)
        if not math.isclose(params.f_pi, expected, rel_tol=FPI_REL_TOL):
            report.append("derived f_pi relation violated")
    else:
        if not params.f_pi > 0.0:
            report.append("f_pi > 0 violated")
        elif not report:
            expected = derive_fpi(params.n_c, params.lambda_cut, params.m_asym)
            if not math.isclose(params.f_pi, expected, rel_tol=FPI_REL_TOL):
                report.append(
                    f"info: override f_pi={params.f_pi:.10g} differs from derived {expected:.10g}; "
                    "closed-form mass is not the potential curvature"
                )
    return report


def is_valid(report: list[str]) -> bool:
    return all(item.startswith("info:") for item in report)
