"""Failure-time distribution of a parallel system under normal use conditions.

A component soft-fails when its degradation path reaches its threshold; the
parallel system fails once both components have.  The system failure-time CDF
is the product of two regularized upper-incomplete-Gamma tails evaluated at
the use-condition shape rates.  The alpha-quantile t_alpha is found by bracket
expansion plus root finding, and its parameter gradient (the coefficient
vector of the c-criterion) follows from the implicit function theorem:

    dt_alpha/dbeta = - (dF_T/dbeta) / f_T(t_alpha).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .errors import DomainError, NumericalError
from .gamma_marginal import BivariateModel, MarginalParams, shape_rate
from .specfun import reg_gamma_q, reg_gamma_q_dshape

__all__ = [
    "UseConditions",
    "marginal_failure_cdf",
    "system_failure_cdf",
    "quantile",
    "c_vector",
    "c_criterion",
]


@dataclass(frozen=True)
class UseConditions:
    """Normal use stresses (typically negative), failure thresholds, and the
    quantile level alpha of interest."""

    x_u: tuple[float, float]
    thresholds: tuple[float, float]
    alpha: float = 0.5

    def __post_init__(self):
        object.__setattr__(self, "x_u", tuple(float(v) for v in self.x_u))
        object.__setattr__(self, "thresholds", tuple(float(v) for v in self.thresholds))
        if len(self.x_u) != 2 or len(self.thresholds) != 2:
            raise DomainError("x_u and thresholds must each have two entries")
        if any(z <= 0 for z in self.thresholds):
            raise DomainError(f"thresholds must be positive, got {self.thresholds}")
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")


def marginal_failure_cdf(p: MarginalParams, x_u: float, z0: float, t) -> float:
    """P(component has failed by time t) = Q(gamma(x_u) t, z0 / scale)."""
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise DomainError(f"t must be positive, got {t}")
    g = float(shape_rate(p, x_u))
    out = reg_gamma_q(g * t, z0 / p.scale)
    return out[()] if np.ndim(out) == 0 else out


def system_failure_cdf(model: BivariateModel, uc: UseConditions, t) -> float:
    """Parallel-system CDF: the product of the two marginal failure CDFs."""
    return (marginal_failure_cdf(model.comp1, uc.x_u[0], uc.thresholds[0], t)
            * marginal_failure_cdf(model.comp2, uc.x_u[1], uc.thresholds[1], t))


def quantile(model: BivariateModel, uc: UseConditions) -> float:
    """The alpha-quantile t_alpha of the system failure time.

    Brackets by doubling the upper end (F_T -> 1 guarantees termination) and
    polishes with Brent's method to |F_T(t_alpha) - alpha| <= 1e-10.
    """
    alpha = uc.alpha

    def f(t):
        return float(system_failure_cdf(model, uc, t)) - alpha

    lo, hi = 1e-6, 1.0
    expansions = 0
    while f(hi) < 0:
        hi *= 2.0
        expansions += 1
        if expansions > 200:
            raise NumericalError("failure-time quantile bracket did not close")
    if f(lo) > 0:
        # degradation so fast that even t=1e-6 exceeds alpha; shrink downward
        while f(lo) > 0 and lo > 1e-300:
            lo /= 2.0
    t_alpha = optimize.brentq(f, lo, hi, xtol=1e-14, rtol=8.9e-16, maxiter=200)
    if abs(f(t_alpha)) > 1e-10:
        raise NumericalError(
            f"quantile root residual {abs(f(t_alpha)):.2e} exceeds 1e-10")
    return float(t_alpha)


def _density_at(model: BivariateModel, uc: UseConditions, t: float) -> float:
    # central difference of the (cheap, smooth) CDF in t
    h = 1e-6 * t
    return float(
        (system_failure_cdf(model, uc, t + h) - system_failure_cdf(model, uc, t - h))
        / (2.0 * h)
    )


def c_vector(model: BivariateModel, uc: UseConditions) -> np.ndarray:
    """Gradient of the failure-time quantile, dt_alpha/dbeta (length 4).

    Components are ordered (b11, b21, b12, b22).  The second and fourth entries
    equal the first and third scaled by the use stresses.  The intercept
    entries are negative (raising a rate accelerates failure); the slope
    entries carry the sign of -x_u.
    """
    t_a = quantile(model, uc)
    fT = _density_at(model, uc, t_a)
    if fT < 1e-14:
        raise NumericalError(
            f"failure-time density at t_alpha is degenerate ({fT:.2e})")
    parts = []
    comps = (model.comp1, model.comp2)
    for l in (0, 1):
        g = float(shape_rate(comps[l], uc.x_u[l]))
        z_over_nu = uc.thresholds[l] / comps[l].scale
        q_other = marginal_failure_cdf(
            comps[1 - l], uc.x_u[1 - l], uc.thresholds[1 - l], t_a)
        dF_b1 = reg_gamma_q_dshape(g * t_a, z_over_nu) * q_other * g * t_a
        parts.extend([dF_b1, uc.x_u[l] * dF_b1])
    return -np.asarray(parts) / fT


def c_criterion(M, c) -> float:
    """Asymptotic variance c' M^-1 c via a range-checked pseudo-solve.

    Returns +inf when c has a component outside the range space of M (the
    scalar function is then not estimable under the design).
    """
    M = np.asarray(M, dtype=float)
    c = np.asarray(c, dtype=float)
    evals, evecs = np.linalg.eigh(M)
    tol = max(evals.max(), 0.0) * 1e-12 + 1e-300
    in_range = evals > tol
    coords = evecs.T @ c
    if np.any(np.abs(coords[~in_range]) > 1e-9 * np.linalg.norm(c)):
        return math.inf
    return float(np.sum(coords[in_range] ** 2 / evals[in_range]))
