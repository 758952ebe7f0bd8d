import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from induced_meson import DomainError, FPiMode, ModelParams, derive_fpi, running_scale, validate_params, xi_factor
from induced_meson.params import XI_SERIES_THRESHOLD, XiFactors


def xi_mp(n, sigma):
    with mpmath.workdps(50):
        x = mpmath.mpf(n) * mpmath.mpf(sigma)
        return (1 - mpmath.exp(-x)) / x


@pytest.mark.parametrize("n, sigma, expected", [(2, 1.0, 0.4323324), (3, 0.5, 0.5179132)])
def test_xi_examples(n, sigma, expected):
    assert xi_factor(n, sigma) == pytest.approx(float(xi_mp(n, sigma)), rel=1e-15)
    assert xi_factor(n, sigma) == pytest.approx(expected, rel=5e-7)


def test_xi_at_zero_is_one():
    assert [xi_factor(n, 0.0) for n in (1, 2, 3)] == [1.0, 1.0, 1.0]


def test_xi_rejects_negative_sigma():
    with pytest.raises(DomainError):
        xi_factor(1, -0.1)
    with pytest.raises(DomainError):
        xi_factor(4, 0.1)


@given(st.floats(min_value=1e-8, max_value=50.0), st.sampled_from([1, 2, 3]))
def test_xi_identity(sigma, n):
    with mpmath.workdps(50):
        exact = float(1 - mpmath.exp(-n * mpmath.mpf(sigma)))
    assert n * sigma * xi_factor(n, sigma) == pytest.approx(exact, rel=1e-14)


@given(st.floats(min_value=1e-4, max_value=20.0), st.floats(min_value=1e-3, max_value=1.0))
def test_xi_ordering_and_decrease(sigma, step):
    x = XiFactors.at(sigma)
    assert 0.0 < x.xi3 < x.xi2 < x.xi1 < 1.0
    for n in (1, 2, 3):
        assert xi_factor(n, sigma + step) < xi_factor(n, sigma)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_xi_series_crossover(n):
    s = XI_SERIES_THRESHOLD / n
    below, above = xi_factor(n, math.nextafter(s, 0.0)), xi_factor(n, math.nextafter(s, 1.0))
    assert abs(below - above) < 1e-12
    assert below == pytest.approx(float(xi_mp(n, s)), rel=1e-15)


@pytest.mark.parametrize("lam, sigma, mu", [(1.0, 0.0, 1.0), (1.0, 1.0, 0.3678794), (2.0, 0.5, 1.2130613)])
def test_running_scale(lam, sigma, mu):
    rp = running_scale(ModelParams(3, lam, 0.0), sigma)
    assert rp.mu == pytest.approx(mu, rel=5e-7)
    assert rp.mu <= lam


def test_running_scale_negative_sigma():
    with pytest.raises(DomainError):
        running_scale(ModelParams(), -1.0)


@pytest.mark.parametrize("m, expected", [(0.0, 0.2756645), (0.3, 0.2629672)])
def test_derive_fpi(m, expected):
    assert derive_fpi(3, 1.0, m) == pytest.approx(expected, rel=5e-7)


def test_derive_fpi_degenerate():
    with pytest.raises(DomainError):
        derive_fpi(3, 1.0, 1.0)


@given(st.integers(1, 10), st.floats(0.1, 10.0), st.floats(0.0, 0.999))
def test_derive_fpi_relation(n_c, lam, ratio):
    m = ratio * lam
    f = derive_fpi(n_c, lam, m)
    assert f**2 * 4 * math.pi**2 / n_c + m**2 == pytest.approx(lam**2, rel=1e-14)


def test_modes():
    assert ModelParams(3, 1.0, 0.3).f_pi_mode is FPiMode.DERIVED
    p = ModelParams(3, 1.0, 0.3, f_pi=0.093)
    assert p.f_pi_mode is FPiMode.OVERRIDE and p.f_pi == 0.093


def test_validate_params_reports():
    assert validate_params(ModelParams(3, 1.0, 0.3)) == []
    assert "m_asym < lambda_cut violated" in validate_params(ModelParams(3, 1.0, 1.5))
    rep = validate_params(ModelParams(3, 1.0, 0.3, f_pi=0.093))
    assert len(rep) == 1 and rep[0].startswith("info:")
