"""Physical outputs at the vacuum: masses, axial and vector shifts, width suppression."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InstabilityError
from .params import ModelParams, xi_factor
from .potential import SingletPotential, kinetic_constant, potential_value, quartic_coupling

HESSIAN_LOG_STEP = 1e-4


@dataclass(frozen=True)
class SpectrumReport:
    m_phi: float
    m_psi: float
    z_phi: float
    delta_mA2: float
    m_A2: float
    delta_V: float
    width_ratio: float
    hessian_residual: float


def scalar_mass_squared(params: ModelParams, sigma: float, phi0: float) -> float:
    if not sigma >= 0.0:
        raise DomainError(f"sigma must be >= 0, got {sigma!r}")
    m, lam = params.m_asym, params.lambda_cut
    return 6.0 * (
        phi0 * phi0
        + 2.0 * m * phi0 * xi_factor(1, sigma)
        + (m - lam) * (m + lam) * xi_factor(2, sigma)
    )


def scalar_mass(params: ModelParams, sigma: float, phi0: float) -> float:
    """Closed-form scalar mass at running scale ``sigma``.

    Raises :class:`InstabilityError` if the mass squared is negative.
    """
    m2 = scalar_mass_squared(params, sigma, phi0)
    if m2 < 0.0:
        raise InstabilityError(f"tachyonic scalar: m_phi^2 = {m2!r} at sigma={sigma!r}, phi0={phi0!r}")
    return math.sqrt(m2)


def scalar_mass_hessian_oracle(params: ModelParams, sigma: float, phi0: float, pot: SingletPotential) -> float:
    """Scalar mass from the curvature of the potential.

    The canonical fluctuation is ``phi`` in ``Phi = phi0 * exp(phi)``, so the
    mass squared is ``d^2 U(phi0 e^phi) / d phi^2`` at ``phi = 0`` divided by
    ``Z_Phi``. The second derivative is a central finite difference. If
    ``pot`` is the per-sigma potential, ``Z_Phi / sigma`` is used instead,
    which also works at ``sigma = 0``.
    """
    if not phi0 > 0.0:
        raise DomainError(f"phi0 must be > 0, got {phi0!r}")
    h = HESSIAN_LOG_STEP
    u0 = potential_value(pot, phi0)
    up = potential_value(pot, phi0 * math.exp(h))
    um = potential_value(pot, phi0 * math.exp(-h))
    curv = (up - 2.0 * u0 + um) / (h * h)
    if pot.per_sigma:
        z = params.n_c * phi0 * phi0 / (2.0 * math.pi**2)
    else:
        if not sigma > 0.0:
            raise DomainError("the curvature oracle needs sigma > 0 or the per-sigma potential")
        z = kinetic_constant(params, sigma, phi0)
    m2 = curv / z
    if m2 < 0.0:
        raise InstabilityError(f"negative curvature at phi0={phi0!r}: m^2 = {m2!r}")
    return math.sqrt(m2)


def quark_mass(phi0: float) -> float:
    """Dynamical quark mass; it is the vacuum value itself."""
    if not phi0 > 0.0:
        raise DomainError(f"phi0 must be > 0, got {phi0!r}")
    return float(phi0)


def vector_coupling_shift(params: ModelParams, sigma: float) -> float:
    if not sigma >= 0.0:
        raise DomainError(f"sigma must be >= 0, got {sigma!r}")
    # sigma n_c / (12 pi^2), written as lam / 3 so it equals the axial shift bit for bit
    return quartic_coupling(params.n_c, sigma) / 3.0


def axial_coupling_shift(params: ModelParams, sigma: float) -> float:
    # identical to the vector shift: lam / 3
    return quartic_coupling(params.n_c, sigma) / 3.0


def axial_mass_shift(
    params: ModelParams, sigma: float, m_phi: float, m_0A: float = 0.0, composite_a: bool = False
) -> tuple[float, float]:
    """``(delta_mA2, m_A2)`` for the axial vector.

    For an elementary axial field ``m_A2 = m_0A**2 + delta_mA2``. With
    ``composite_a`` the axial field shares the compositeness scale and
    ``m_A2 = m_phi**2``.
    """
    if not sigma >= 0.0:
        raise DomainError(f"sigma must be >= 0, got {sigma!r}")
    delta = axial_coupling_shift(params, sigma) * m_phi * m_phi
    if composite_a:
        return delta, m_phi * m_phi
    return delta, m_0A * m_0A + delta


def axial_quadratic_check(params: ModelParams, sigma: float, phi0: float) -> float:
    """Relative deviation of the axial quadratic-form coefficient from ``-(lam/3) m_phi^2``.

    Vanishes identically in derived-F_pi mode; with an independent F_pi it
    measures the mismatch.
    """
    lam = quartic_coupling(params.n_c, sigma)
    mu2 = 3.0 * params.f_pi**2 * sigma * xi_factor(2, sigma)
    coeff = (
        2.0 / 3.0 * mu2
        - 2.0 * lam * phi0 * phi0
        - params.n_c * params.m_asym / math.pi**2 * sigma * xi_factor(1, sigma) * phi0
    )
    expected = -lam / 3.0 * scalar_mass_squared(params, sigma, phi0)
    if expected == 0.0:
        return 0.0 if coeff == 0.0 else math.inf
    return abs(coeff - expected) / abs(expected)


def width_coupling_ratio(params: ModelParams, sigma: float) -> float:
    """Scalar-pseudoscalar coupling relative to the dilaton model, ``M xi_1 sqrt(3 sigma / 2 pi^2) / F_pi``."""
    if not sigma >= 0.0:
        raise DomainError(f"sigma must be >= 0, got {sigma!r}")
    return params.m_asym * xi_factor(1, sigma) * math.sqrt(3.0 * sigma / (2.0 * math.pi**2)) / params.f_pi


def compute_spectrum(
    params: ModelParams,
    sigma: float,
    phi0: float,
    pot: SingletPotential,
    m_0A: float = 0.0,
    composite_a: bool = False,
) -> SpectrumReport:
    m_phi = scalar_mass(params, sigma, phi0)
    oracle = scalar_mass_hessian_oracle(params, sigma, phi0, pot)
    delta, m_a2 = axial_mass_shift(params, sigma, m_phi, m_0A, composite_a)
    return SpectrumReport(
        m_phi=m_phi,
        m_psi=quark_mass(phi0),
        z_phi=kinetic_constant(params, sigma, phi0),
        delta_mA2=delta,
        m_A2=m_a2,
        delta_V=vector_coupling_shift(params, sigma),
        width_ratio=width_coupling_ratio(params, sigma),
        hessian_residual=abs(oracle - m_phi) / m_phi if m_phi > 0.0 else abs(oracle),
    )
