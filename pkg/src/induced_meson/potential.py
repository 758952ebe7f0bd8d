"""Coefficients of the induced effective Lagrangian and the singlet potential.

The potential is minus the non-kinetic part of the Lagrangian, evaluated on
constant singlet fields ``Phi = s * 1`` in two-flavor space::

    U(s) = -2 mu2 s^2 + lam s^4 + 2 c_lin s + 2 c_cub s^3
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .condensates import condensates_forward
from .errors import ConsistencyError, DomainError
from .params import ModelParams, xi_factor

FLAVOR_TRACE = 2
CQ_CONSISTENCY_TOL = 1e-10


@dataclass(frozen=True)
class PotentialCoeffs:
    mu2: float    # GeV^2
    lam: float    # dimensionless
    c_lin: float  # GeV^3
    c_cub: float  # GeV
    sigma: float


@dataclass(frozen=True)
class SingletPotential:
    coeffs: PotentialCoeffs
    flavor_trace: int = FLAVOR_TRACE
    per_sigma: bool = False  # coefficients divided by sigma


def quartic_coupling(n_c: int, sigma: float) -> float:
    return n_c * sigma / (4.0 * math.pi**2)


def potential_coeffs(params: ModelParams, c_q: float | None = None, sigma: float = 0.0, strict: bool = True) -> PotentialCoeffs:
    """Coefficients at running scale ``sigma``.

    ``c_q`` defaults to the quark condensate implied by ``params``; an
    explicit value is checked against it unless ``strict=False``.
    """
    if not sigma >= 0.0:
        raise DomainError(f"sigma must be >= 0, got {sigma!r}")
    expected = condensates_forward(params.n_c, params.lambda_cut, params.m_asym).c_q
    if c_q is None:
        c_q = expected
    elif strict and abs(c_q - expected) > CQ_CONSISTENCY_TOL * max(abs(expected), params.lambda_cut**3):
        raise ConsistencyError(f"c_q={c_q!r} inconsistent with params (expected {expected!r})")
    pref = params.n_c / (2.0 * math.pi**2)
    return PotentialCoeffs(
        mu2=3.0 * params.f_pi**2 * sigma * xi_factor(2, sigma),
        lam=quartic_coupling(params.n_c, sigma),
        c_lin=3.0 * c_q * sigma * xi_factor(3, sigma),
        c_cub=pref * params.m_asym * sigma * xi_factor(1, sigma),
        sigma=sigma,
    )


def singlet_potential(params: ModelParams, sigma: float, c_q: float | None = None) -> SingletPotential:
    return SingletPotential(potential_coeffs(params, c_q, sigma))


def _check_s(s):
    if not s > 0.0:
        raise DomainError(f"field value must be > 0 in the nonlinear representation, got {s!r}")


def potential_value(pot: SingletPotential, s: float) -> float:
    _check_s(s)
    c = pot.coeffs
    tr = pot.flavor_trace
    return -tr * c.mu2 * s**2 + 0.5 * tr * c.lam * s**4 + tr * c.c_lin * s + tr * c.c_cub * s**3


def potential_derivatives(pot: SingletPotential, s: float) -> tuple[float, float]:
    """Analytic ``(U'(s), U''(s))``."""
    _check_s(s)
    c = pot.coeffs
    tr = pot.flavor_trace
    d1 = -2.0 * tr * c.mu2 * s + 2.0 * tr * c.lam * s**3 + tr * c.c_lin + 3.0 * tr * c.c_cub * s**2
    d2 = -2.0 * tr * c.mu2 + 6.0 * tr * c.lam * s**2 + 6.0 * tr * c.c_cub * s
    return d1, d2


def kinetic_constant(params: ModelParams, sigma: float, phi0: float) -> float:
    """Coefficient ``Z_Phi = n_c sigma phi0^2 / (2 pi^2)`` of the fluctuation kinetic term."""
    if not sigma >= 0.0:
        raise DomainError(f"sigma must be >= 0, got {sigma!r}")
    if not phi0 > 0.0:
        raise DomainError(f"phi0 must be > 0, got {phi0!r}")
    return params.n_c * sigma * phi0 * phi0 / (2.0 * math.pi**2)
