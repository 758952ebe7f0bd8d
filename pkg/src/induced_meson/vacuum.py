"""Stationarity cubic for the vacuum, its real roots and the physical root.

The cubic is ``Phi^3 + a2 Phi^2 + a1 Phi + a0 = 0``, i.e. ``U'(Phi) / (4 lam)``.
Its coefficients stay finite as ``sigma -> 0`` once the common factor sigma
is cancelled, which is how they are evaluated here.
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field

import mpmath
import numpy as np

from .condensates import condensates_forward
from .errors import DomainError, MisuseError, NoVacuumError, OracleRangeError
from .params import ModelParams, xi_factor
from .potential import FLAVOR_TRACE, PotentialCoeffs, SingletPotential, potential_coeffs

DEGENERATE_REL_TOL = 1e-12


class VacuumKind(str, enum.Enum):
    CLOSED_FORM_M0 = "closed_form_m0"
    CLOSED_FORM_SIGMA0 = "closed_form_sigma0"
    CARDANO_SELECTED = "cardano_selected"


@dataclass(frozen=True)
class CubicCoefficients:
    a2: float
    a1: float
    a0: float

    def __call__(self, x: float) -> float:
        return ((x + self.a2) * x + self.a1) * x + self.a0

    def derivative(self, x: float) -> float:
        return (3.0 * x + 2.0 * self.a2) * x + self.a1

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.a2), abs(self.a1), abs(self.a0))


@dataclass(frozen=True)
class VacuumSolution:
    phi0: float
    all_real_roots: list[float]
    curvature: float  # second derivative of U/sigma at phi0, finite at sigma = 0
    residual: float
    kind: VacuumKind
    warnings: list[str] = field(default_factory=list)


def cubic_coefficients(params: ModelParams, c_q: float | None = None, sigma: float = 0.0) -> CubicCoefficients:
    if not sigma >= 0.0:
        raise DomainError(f"sigma must be >= 0, got {sigma!r}")
    if c_q is None:
        c_q = condensates_forward(params.n_c, params.lambda_cut, params.m_asym).c_q
    n_c = params.n_c
    return CubicCoefficients(
        a2=3.0 * params.m_asym * xi_factor(1, sigma),
        a1=-12.0 * math.pi**2 * params.f_pi**2 * xi_factor(2, sigma) / n_c,
        a0=6.0 * math.pi**2 * c_q * xi_factor(3, sigma) / n_c,
    )


def cubic_from_potential(pot: SingletPotential) -> CubicCoefficients:
    """Monic cubic ``U'(s) / (2 tr lam)`` read off the potential coefficients."""
    c = pot.coeffs
    if not c.lam > 0.0:
        raise DomainError("quartic coupling vanishes; use cubic_coefficients for the sigma = 0 limit")
    return CubicCoefficients(a2=1.5 * c.c_cub / c.lam, a1=-c.mu2 / c.lam, a0=0.5 * c.c_lin / c.lam)


def _polish(c: CubicCoefficients, x: float, steps: int = 2) -> float:
    for _ in range(steps):
        d = c.derivative(x)
        if d == 0.0:
            break
        xn = x - c(x) / d
        if abs(c(xn)) >= abs(c(x)):
            break
        x = xn
    return x


def solve_cubic(c: CubicCoefficients) -> list[float]:
    """All real roots, ascending, polished by Newton steps.

    Three distinct real roots use the trigonometric form, otherwise Cardano's
    single real root (or the double-root pair on a zero discriminant).
    """
    # rescale x = k y so the coefficients are O(1); avoids under/overflow in the discriminant
    k = max(abs(c.a2), math.sqrt(abs(c.a1)), np.cbrt(abs(c.a0)))
    if k == 0.0:
        return [0.0]
    b2, b1, b0 = c.a2 / k, c.a1 / k / k, c.a0 / k / k / k
    shift = b2 / 3.0
    p = b1 - b2 * b2 / 3.0
    q = 2.0 * b2**3 / 27.0 - b2 * b1 / 3.0 + b0
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if p == 0.0 and q == 0.0:
        ts = [0.0]
    elif disc < 0.0:
        r = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * r)
        theta = math.acos(min(1.0, max(-1.0, arg)))
        ts = [r * math.cos((theta - 2.0 * math.pi * j) / 3.0) for j in range(3)]
    elif disc == 0.0:
        ts = [3.0 * q / p, -1.5 * q / p]
    else:
        a = -math.copysign(float(np.cbrt(abs(q) / 2.0 + math.sqrt(disc))), q)
        b = -p / (3.0 * a) if a != 0.0 else 0.0
        ts = [a + b]
    return sorted(_polish(c, k * (t - shift)) for t in ts)


def _reduced_value(c: CubicCoefficients, s: float) -> float:
    # antiderivative of the cubic; equals U / (4 lam) up to a constant
    return ((0.25 * s + c.a2 / 3.0) * s + 0.5 * c.a1) * s * s + c.a0 * s


def scaled_potential(params: ModelParams, sigma: float, c_q: float | None = None) -> SingletPotential:
    """The potential divided by sigma, whose coefficients stay finite at ``sigma = 0``."""
    co = potential_coeffs(params, c_q, sigma)  # validates sigma and c_q
    if c_q is None:
        c_q = condensates_forward(params.n_c, params.lambda_cut, params.m_asym).c_q
    return SingletPotential(
        PotentialCoeffs(
            mu2=3.0 * params.f_pi**2 * xi_factor(2, sigma),
            lam=params.n_c / (4.0 * math.pi**2),
            c_lin=3.0 * c_q * xi_factor(3, sigma),
            c_cub=params.n_c * params.m_asym * xi_factor(1, sigma) / (2.0 * math.pi**2),
            sigma=co.sigma,
        ),
        per_sigma=True,
    )


def select_vacuum(params: ModelParams, sigma: float, roots: list[float], pot: SingletPotential | None = None) -> VacuumSolution:
    """Pick the positive, locally stable, deepest root.

    With ``pot`` given (and a nonzero quartic coupling) the cubic and the
    potential are taken from it; otherwise from ``params`` at ``sigma``,
    which also covers the ``sigma = 0`` limit.
    """
    if not roots:
        raise NoVacuumError("no real roots supplied")
    if pot is not None and pot.coeffs.lam > 0.0:
        cubic = cubic_from_potential(pot)
        lam_per_sigma = pot.coeffs.lam if pot.per_sigma else pot.coeffs.lam / sigma
        curv_factor = 2.0 * pot.flavor_trace * lam_per_sigma
    else:
        cubic = cubic_coefficients(params, None, sigma)
        curv_factor = 2.0 * FLAVOR_TRACE * params.n_c / (4.0 * math.pi**2)

    minima = [r for r in roots if r > 0.0 and cubic.derivative(r) > 0.0]
    if not minima:
        raise NoVacuumError(
            f"no positive local minimum among roots {roots!r} (sigma={sigma!r}); parameters outside the stable region"
        )
    notes = []
    depths = [_reduced_value(cubic, r) for r in minima]
    deepest = min(depths)
    tol = DEGENERATE_REL_TOL * max(abs(deepest), cubic.scale)
    tied = [r for r, d in zip(minima, depths) if d - deepest <= tol]
    phi0 = max(tied)
    if len(minima) > 1:
        notes.append(f"multiple positive minima {minima!r}; selected deepest {phi0!r}")
    if len(tied) > 1:
        msg = f"degenerate minima {tied!r}; selected the larger root"
        warnings.warn(msg, RuntimeWarning, stacklevel=2)
        notes.append(msg)
    return VacuumSolution(
        phi0=phi0,
        all_real_roots=list(roots),
        curvature=curv_factor * cubic.derivative(phi0),
        residual=abs(cubic(phi0)),
        kind=VacuumKind.CARDANO_SELECTED,
        warnings=notes,
    )



def vacuum_closed_form_m0(params: ModelParams, sigma: float) -> float:
    """``sqrt(mu2 / lam)`` for vanishing spectral asymmetry."""
    if params.m_asym != 0.0:
        raise MisuseError("vacuum_closed_form_m0 requires m_asym = 0")
    if not sigma > 0.0:
        raise DomainError("vacuum_closed_form_m0 requires sigma > 0")
    return math.sqrt(12.0 * math.pi**2 * params.f_pi**2 * xi_factor(2, sigma) / params.n_c)


def vacuum_closed_form_sigma0(params: ModelParams) -> float:
    """Positive vacuum at the compositeness scale, ``sqrt(3) lambda_cut - m_asym``."""
    phi0 = math.sqrt(3.0) * params.lambda_cut - params.m_asym
    if not phi0 > 0.0:
        raise NoVacuumError(
            f"no positive vacuum at sigma=0: sqrt(3)*lambda_cut - m_asym = {phi0!r} <= 0"
        )
    return phi0


def find_vacuum(params: ModelParams, sigma: float, c_q: float | None = None, closed_form: bool = True) -> VacuumSolution:
    """Solve the stationarity cubic and select the vacuum.

    With ``closed_form=True`` the exact expressions are used where they apply
    (``m_asym = 0``, or ``sigma = 0`` with derived F_pi); roots, curvature and residual are
    still reported from the cubic.
    """
    cubic = cubic_coefficients(params, c_q, sigma)
    roots = solve_cubic(cubic)
    pot = scaled_potential(params, sigma, c_q)
    sol = select_vacuum(params, sigma, roots, pot)
    if not closed_form:
        return sol
    if sigma == 0.0 and params.derived:
        phi0, kind = vacuum_closed_form_sigma0(params), VacuumKind.CLOSED_FORM_SIGMA0
    elif params.m_asym == 0.0:
        phi0, kind = vacuum_closed_form_m0(params, sigma), VacuumKind.CLOSED_FORM_M0
    else:
        return sol
    curv = sol.curvature / cubic.derivative(sol.phi0) * cubic.derivative(phi0)
    return VacuumSolution(
        phi0=phi0,
        all_real_roots=sol.all_real_roots,
        curvature=curv,
        residual=abs(cubic(phi0)),
        kind=kind,
        warnings=sol.warnings,
    )


def vacuum_oracle_grid(pot: SingletPotential, s_max: float, n_points: int = 10**6, dps: int = 40) -> float:
    """Brute-force minimizer of the potential on ``(0, s_max]``.

    A uniform scan brackets the minimum, then golden-section search in
    extended precision narrows it to ``1e-10 * s_max``.
    """
    if not s_max > 0.0:
        raise DomainError("s_max must be > 0")
    if n_points < 1000:
        raise DomainError("n_points must be >= 1000")
    c = pot.coeffs
    tr = pot.flavor_trace
    s = np.linspace(s_max / n_points, s_max, n_points)
    u = tr * (((0.5 * c.lam * s + c.c_cub) * s - c.mu2) * s + c.c_lin) * s
    i = int(np.argmin(u))  # first occurrence, ties to smaller s
    if i == n_points - 1:
        raise OracleRangeError(f"potential minimum at the grid boundary s_max={s_max!r}; enlarge the range")
    h = s_max / n_points
    with mpmath.workdps(dps):
        lam, cc, mu2, cl = (mpmath.mpf(v) for v in (c.lam, c.c_cub, c.mu2, c.c_lin))

        def f(x):
            return tr * (((lam / 2 * x + cc) * x - mu2) * x + cl) * x

        a = mpmath.mpf(max(s[i] - h, 0.0))
        b = mpmath.mpf(s[i] + h)
        g = (mpmath.sqrt(5) - 1) / 2
        x1, x2 = b - g * (b - a), a + g * (b - a)
        f1, f2 = f(x1), f(x2)
        width = mpmath.mpf(1e-10 * s_max)
        while b - a > width:
            if f1 <= f2:
                b, x2, f2 = x2, x1, f1
                x1 = b - g * (b - a)
                f1 = f(x1)
            else:
                a, x1, f1 = x1, x2, f2
                x2 = a + g * (b - a)
                f2 = f(x2)
        return float((a + b) / 2)
