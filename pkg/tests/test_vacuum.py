import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from induced_meson import (
    CubicCoefficients,
    DomainError,
    MisuseError,
    ModelParams,
    NoVacuumError,
    OracleRangeError,
    PotentialCoeffs,
    SingletPotential,
    VacuumKind,
    cubic_coefficients,
    find_vacuum,
    scaled_potential,
    select_vacuum,
    singlet_potential,
    solve_cubic,
    vacuum_closed_form_m0,
    vacuum_closed_form_sigma0,
    vacuum_oracle_grid,
    xi_factor,
)

from conftest import GRID, MODELS

SQRT3 = math.sqrt(3.0)


def test_cubic_coefficients_m0(params_m0):
    c = cubic_coefficients(params_m0, None, 1.0)
    assert c.a2 == 0.0 and c.a0 == 0.0
    assert c.a1 == pytest.approx(-3 * xi_factor(2, 1.0), rel=1e-14)
    assert c.a1 == pytest.approx(-1.2969972, rel=5e-7)


def test_cubic_coefficients_m03(params_m03):
    c = cubic_coefficients(params_m03, None, 0.5)
    assert c.a2 == pytest.approx(0.9 * xi_factor(1, 0.5), rel=1e-15)
    assert c.a2 == pytest.approx(0.7082448, rel=5e-7)
    assert c.a1 == pytest.approx(-3 * 0.91 * xi_factor(2, 0.5), rel=1e-14)
    assert c.a1 == pytest.approx(-1.7256892, rel=5e-7)
    assert c.a0 == pytest.approx((0.027 - 0.9) * xi_factor(3, 0.5), rel=1e-14)
    assert c.a0 == pytest.approx(-0.4521382, rel=5e-7)


@pytest.mark.parametrize("params", MODELS)
def test_cubic_sigma0_limits(params):
    lam, m = params.lambda_cut, params.m_asym
    c = cubic_coefficients(params, None, 0.0)
    assert c.a2 == 3 * m
    assert c.a1 == pytest.approx(-3 * (lam**2 - m**2), rel=1e-14)
    assert c.a0 == pytest.approx(m**3 - 3 * lam**2 * m, rel=1e-14, abs=1e-15)


@pytest.mark.parametrize("params", MODELS)
def test_raw_ratio_form_agrees(params):
    # coefficients built from the potential ratios, not the simplified forms
    from induced_meson.vacuum import cubic_from_potential

    for sigma in (0.01, 0.5, 2.0):
        a = cubic_from_potential(singlet_potential(params, sigma))
        b = cubic_coefficients(params, None, sigma)
        for x, y in ((a.a2, b.a2), (a.a1, b.a1), (a.a0, b.a0)):
            assert x == pytest.approx(y, rel=1e-13, abs=1e-15)


def test_solve_cubic_m0_roots():
    roots = solve_cubic(CubicCoefficients(0.0, -1.2969972, 0.0))
    r = math.sqrt(1.2969972)
    assert roots == pytest.approx([-r, 0.0, r], abs=1e-15)
    assert roots[2] == pytest.approx(1.1388579, rel=5e-7)


def test_solve_cubic_sigma0_vacuum():
    roots = solve_cubic(CubicCoefficients(0.9, -3 * 0.91, 0.027 - 0.9))
    assert roots[-1] == pytest.approx(SQRT3 - 0.3, rel=1e-14)
    assert roots[-1] == pytest.approx(1.4320508, rel=5e-7)


def test_solve_cubic_against_grid_oracle(params_m03):
    c = cubic_coefficients(params_m03, None, 0.5)
    roots = solve_cubic(c)
    oracle = vacuum_oracle_grid(singlet_potential(params_m03, 0.5), 3.0, 10**6)
    assert max(roots) == pytest.approx(oracle, rel=1e-8)
    assert max(roots) == pytest.approx(1.1446, abs=5e-5)


@pytest.mark.parametrize(
    "coeffs, exact",
    [
        ((0.0, 0.0, 0.0), [0.0]),
        ((0.0, 0.0, -8.0), [2.0]),
        ((-3.0, 3.0, -1.0), [1.0]),  # triple root
        ((1.0, 1.0, 1.0), [-1.0]),
        ((-6.0, 11.0, -6.0), [1.0, 2.0, 3.0]),
        ((0.0, -3.0, 2.0), [-2.0, 1.0]),  # double root at 1
        ((-1e6, -1e6 + 2e-3, 2e-3 * 1e6), None),
    ],
)
def test_solve_cubic_known_roots(coeffs, exact):
    c = CubicCoefficients(*coeffs)
    roots = solve_cubic(c)
    assert roots == sorted(roots)
    for r in roots:
        assert abs(c(r)) < 1e-12 * c.scale * max(1.0, abs(r)) ** 3
    if exact is None:
        return
    for x in exact:
        assert min(abs(r - x) for r in roots) < 1e-5
    # a multiple root may come back once or as a close pair, never as a spurious new root
    for r in roots:
        assert min(abs(r - x) for x in exact) < 1e-5


@settings(max_examples=300)
@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5))
def test_solve_cubic_residual_property(a2, a1, a0):
    c = CubicCoefficients(a2, a1, a0)
    roots = solve_cubic(c)
    assert 1 <= len(roots) <= 3
    scale = c.scale
    for r in roots:
        assert abs(c(r)) < 1e-12 * scale * max(1.0, abs(r)) ** 3
    n_real = sum(abs(z.imag) < 1e-7 for z in np.roots([1, a2, a1, a0]))
    if n_real == 3:
        disc = (a2 * a2 * a1 * a1 - 4 * a1**3 - 4 * a2**3 * a0 - 27 * a0 * a0 + 18 * a2 * a1 * a0)
        if disc > 1e-6:
            assert len(roots) == 3


def test_select_vacuum_m0(params_m0):
    c = cubic_coefficients(params_m0, None, 1.0)
    sol = select_vacuum(params_m0, 1.0, solve_cubic(c), singlet_potential(params_m0, 1.0))
    assert sol.phi0 == pytest.approx(math.sqrt(3 * xi_factor(2, 1.0)), rel=1e-14)
    assert sol.curvature > 0.0
    assert sol.kind is VacuumKind.CARDANO_SELECTED


def test_select_vacuum_sigma0(params_m03):
    roots = solve_cubic(cubic_coefficients(params_m03, None, 0.0))
    sol = select_vacuum(params_m03, 0.0, roots)
    assert sol.phi0 == pytest.approx(1.4320508075688772, rel=1e-14)


def test_select_vacuum_pathological():
    pot = SingletPotential(PotentialCoeffs(mu2=0.0, lam=0.1, c_lin=0.05, c_cub=0.0, sigma=1.0))
    from induced_meson.vacuum import cubic_from_potential

    roots = solve_cubic(cubic_from_potential(pot))
    with pytest.raises(NoVacuumError):
        select_vacuum(ModelParams(), 1.0, roots, pot)


def test_select_vacuum_degenerate_minima_prefers_larger():
    # U/(4 lam) = (s-1)^2 (s-3)^2 / 4: two equal minima at s=1 and s=3, maximum at 2
    lam = 0.1
    a2, a1, a0 = -6.0, 11.0, -6.0  # derivative (s-1)(s-2)(s-3)
    pot = SingletPotential(PotentialCoeffs(mu2=-a1 * lam, lam=lam, c_lin=2 * lam * a0, c_cub=2 * lam * a2 / 3, sigma=1.0))
    with pytest.warns(RuntimeWarning):
        sol = select_vacuum(ModelParams(), 1.0, [1.0, 2.0, 3.0], pot)
    assert sol.phi0 == 3.0
    assert any("multiple positive minima" in w for w in sol.warnings)


def test_closed_form_m0(params_m0):
    assert vacuum_closed_form_m0(params_m0, 1.0) == pytest.approx(1.1388579, rel=5e-7)
    assert vacuum_closed_form_m0(params_m0, 1e-9) == pytest.approx(SQRT3, rel=1e-8)
    r = vacuum_closed_form_m0(params_m0, 0.3) / vacuum_closed_form_m0(params_m0, 1.7)
    assert r == pytest.approx(math.sqrt(xi_factor(2, 0.3) / xi_factor(2, 1.7)), rel=1e-14)
    with pytest.raises(MisuseError):
        vacuum_closed_form_m0(ModelParams(3, 1.0, 0.3), 1.0)


def test_closed_form_sigma0():
    assert vacuum_closed_form_sigma0(ModelParams(3, 1.0, 0.3)) == pytest.approx(1.4320508, rel=5e-7)
    assert vacuum_closed_form_sigma0(ModelParams(3, 1.0, 0.0)) == pytest.approx(1.7320508, rel=5e-7)
    with pytest.raises(NoVacuumError):
        vacuum_closed_form_sigma0(ModelParams(3, 1.0, 2.0, f_pi=0.1))


def test_oracle_quartic_toy():
    pot = SingletPotential(PotentialCoeffs(mu2=0.3, lam=0.2, c_lin=0.0, c_cub=0.0, sigma=1.0))
    assert vacuum_oracle_grid(pot, 4.0, 10**4) == pytest.approx(math.sqrt(0.3 / 0.2), rel=1e-9)


def test_oracle_sigma0_limit(params_m03):
    phi = vacuum_oracle_grid(scaled_potential(params_m03, 0.0), 3.0, 10**5)
    assert phi == pytest.approx(SQRT3 - 0.3, rel=1e-8)


def test_oracle_range_errors():
    pot = SingletPotential(PotentialCoeffs(mu2=0.3, lam=0.2, c_lin=0.0, c_cub=0.0, sigma=1.0))
    with pytest.raises(OracleRangeError):
        vacuum_oracle_grid(pot, 1.0, 10**4)
    with pytest.raises(DomainError):
        vacuum_oracle_grid(pot, 4.0, 10)


@pytest.mark.parametrize("params, sigma", GRID)
def test_selected_vacuum_matches_oracle(params, sigma):
    sol = find_vacuum(params, sigma, closed_form=False)
    oracle = vacuum_oracle_grid(singlet_potential(params, sigma), 3.0 * params.lambda_cut, 10**5)
    assert sol.phi0 == pytest.approx(oracle, rel=1e-8)
    assert sol.curvature > 0.0
    assert sol.residual < 1e-10 * cubic_coefficients(params, None, sigma).scale


@pytest.mark.parametrize("params", MODELS)
def test_sigma_to_zero_limit(params):
    sol = find_vacuum(params, 1e-6, closed_form=False)
    assert sol.phi0 == pytest.approx(SQRT3 * params.lambda_cut - params.m_asym, rel=1e-6)
    exact = find_vacuum(params, 0.0)
    assert exact.kind is VacuumKind.CLOSED_FORM_SIGMA0
    assert exact.phi0 == pytest.approx(SQRT3 * params.lambda_cut - params.m_asym, rel=1e-12)


@pytest.mark.parametrize("params", MODELS)
def test_phi0_continuous_in_sigma(params):
    sigmas = np.linspace(0.0, 3.0, 301)
    phi = np.array([find_vacuum(params, float(s), closed_form=False).phi0 for s in sigmas])
    steps = np.abs(np.diff(phi))
    # smooth branch: neighbouring steps stay within a small factor of each other
    assert np.all(steps[1:] < 2.0 * steps[:-1] + 1e-12)
    assert np.all(steps[:-1] < 2.0 * steps[1:] + 1e-12)


def test_closed_form_and_cardano_agree_m0():
    for lam in (0.5, 1.0, 2.0):
        p = ModelParams(3, lam, 0.0)
        for sigma in (0.01, 0.5, 2.0):
            a = find_vacuum(p, sigma)
            b = find_vacuum(p, sigma, closed_form=False)
            assert a.kind is VacuumKind.CLOSED_FORM_M0
            assert a.phi0 == pytest.approx(b.phi0, rel=1e-12)
