import itertools

import pytest

from induced_meson import ModelParams

LAMBDAS = (0.5, 1.0, 2.0)
M_RATIOS = (0.0, 0.1, 0.3, 0.5)
SIGMAS = (0.01, 0.1, 0.5, 1.0, 2.0)

GRID = [
    pytest.param(ModelParams(3, lam, r * lam), sigma, id=f"L{lam}-M{r}-s{sigma}")
    for lam, r, sigma in itertools.product(LAMBDAS, M_RATIOS, SIGMAS)
]
MODELS = [pytest.param(ModelParams(3, lam, r * lam), id=f"L{lam}-M{r}") for lam, r in itertools.product(LAMBDAS, M_RATIOS)]


@pytest.fixture
def params_m0():
    return ModelParams(n_c=3, lambda_cut=1.0, m_asym=0.0)


@pytest.fixture
def params_m03():
    return ModelParams(n_c=3, lambda_cut=1.0, m_asym=0.3)


ACCEPTANCE_RESULTS = []


def record_acceptance(number, title, passed, detail=""):
    ACCEPTANCE_RESULTS.append((number, title, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_RESULTS):
        tag = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{number}] {tag}  {title}  {detail}".rstrip())
