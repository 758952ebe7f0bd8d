"""Quark and gluon condensates as functions of (lambda_cut, m_asym), and the inverse map."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, NoSolutionError

MAX_ITER = 200
MAX_HALVINGS = 30
CONVERGED_RESIDUAL = 1e-10
_TARGET_RESIDUAL = 1e-14


@dataclass(frozen=True)
class Condensates:
    c_q: float  # GeV^3
    c_g: float  # GeV^4


def condensates_forward(n_c: int, lambda_cut: float, m_asym: float) -> Condensates:
    """Condensates ``(c_q, c_g)`` for the given scale and spectral asymmetry.

    The gluon condensate comes out negative for ``m_asym`` well below
    ``lambda_cut``; the sign is kept as is.
    """
    if not lambda_cut > 0.0:
        raise DomainError(f"lambda_cut must be > 0, got {lambda_cut!r}")
    lam2 = lambda_cut * lambda_cut
    m = m_asym
    pref = n_c / (2.0 * math.pi**2)
    c_q = -pref * (lam2 * m - m**3 / 3.0)
    c_g = 3.0 * pref * (6.0 * lam2 * m * m - lam2 * lam2 - m**4)
    return Condensates(c_q=c_q, c_g=c_g)


def forward_jacobian(n_c: int, lambda_cut: float, m_asym: float) -> np.ndarray:
    """``[[dc_q/dL, dc_q/dM], [dc_g/dL, dc_g/dM]]``."""
    lam, m = lambda_cut, m_asym
    pref = n_c / (2.0 * math.pi**2)
    return np.array(
        [
            [-pref * 2.0 * lam * m, -pref * (lam * lam - m * m)],
            [3.0 * pref * (12.0 * lam * m * m - 4.0 * lam**3), 3.0 * pref * (12.0 * lam * lam * m - 4.0 * m**3)],
        ]
    )


def _energy_scale(target: Condensates) -> float:
    if target.c_g != 0.0:
        return abs(target.c_g) ** 0.25
    if target.c_q != 0.0:
        return abs(target.c_q) ** (1.0 / 3.0)
    raise NoSolutionError("both condensates vanish; no scale on the physical branch")


def _on_branch(lam: float, m: float) -> bool:
    return lam > 0.0 and 0.0 <= m < lam


def _image_ratio_bound(n_c: int) -> float:
    # c_g / |c_q|^(4/3) increases monotonically with m/lambda on [0, 1); this is its supremum
    c = condensates_forward(n_c, 1.0, 1.0)
    return c.c_g / abs(c.c_q) ** (4.0 / 3.0)


def _newton(n_c, target, scale, x0):
    """Damped Newton on the dimensionless residual. Returns (x, residual, converged)."""
    w = np.array([scale**-3, scale**-4])

    def resid(x):
        c = condensates_forward(n_c, x[0], x[1])
        return w * np.array([c.c_q - target.c_q, c.c_g - target.c_g])

    x = np.asarray(x0, dtype=float)
    r = resid(x)
    rn = float(np.linalg.norm(r))
    for _ in range(MAX_ITER):
        if rn < _TARGET_RESIDUAL:
            break
        jac = w[:, None] * forward_jacobian(n_c, x[0], x[1])
        try:
            step = np.linalg.solve(jac, -r)
        except np.linalg.LinAlgError:
            break
        t = 1.0
        for _ in range(MAX_HALVINGS + 1):
            xn = x + t * step
            if xn[0] > 0.0:
                rn_new = float(np.linalg.norm(resid(xn)))
                if rn_new < rn:
                    break
            t *= 0.5
        else:
            break
        x, r, rn = xn, resid(xn), rn_new
    return x, rn, rn < CONVERGED_RESIDUAL


def _start_grid(n_c, target, scale):
    # scale from c_g on the M=0 line: |c_g| = 3 n_c L^4 / (2 pi^2)
    lam0 = (2.0 * math.pi**2 * scale**4 / (3.0 * n_c)) ** 0.25
    for lam in lam0 * np.logspace(math.log10(0.25), math.log10(4.0), 9):
        for frac in np.arange(10) / 10.0:
            yield (float(lam), float(frac * lam))


def condensates_invert(
    n_c: int, target: Condensates, guess: tuple[float, float] | None = None
) -> tuple[float, float]:
    """Find ``(lambda_cut, m_asym)`` on the branch ``lambda_cut > m_asym >= 0``.

    Uses damped Newton with the analytic Jacobian, started from ``guess`` or,
    without a guess, from a fixed grid of starts (lowest residual wins, ties
    go to the earlier start).
    """
    scale = _energy_scale(target)
    if target.c_q > 0.0:
        raise NoSolutionError("c_q > 0 lies outside the image of the physical branch")
    if target.c_q == 0.0:
        # only m_asym = 0 is on the branch
        if not target.c_g < 0.0:
            raise NoSolutionError("c_q = 0 requires c_g < 0 on the physical branch")
        return (-2.0 * math.pi**2 * target.c_g / (3.0 * n_c)) ** 0.25, 0.0
    if target.c_g / abs(target.c_q) ** (4.0 / 3.0) >= _image_ratio_bound(n_c):
        raise NoSolutionError("condensate ratio lies outside the image of the physical branch")

    starts = [guess] if guess is not None else list(_start_grid(n_c, target, scale))
    best = None
    best_any = (math.inf, None)
    for x0 in starts:
        x, rn, ok = _newton(n_c, target, scale, x0)
        if rn < best_any[0]:
            best_any = (rn, (float(x[0]), float(x[1])))
        if ok and _on_branch(x[0], x[1]) and (best is None or rn < best[0]):
            best = (rn, (float(x[0]), float(x[1])))
    if best is None:
        raise ConvergenceError(
            "condensate inversion did not converge on the physical branch",
            best_residual=best_any[0],
            best_point=best_any[1],
        )
    return best[1]
