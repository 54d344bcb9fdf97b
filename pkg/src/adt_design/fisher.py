"""Elemental and design Fisher information matrices.

Independent model: block-diagonal with marginal blocks lambda_l(x) (1,x)'(1,x),
where lambda is the trigamma-weighted sum over observation intervals.

Copula model: M(x) = H(x) + M_ind(x).  The H entries are double integrals of
copula-density ratios against the bivariate increment law.  Substituting
u = F_1(y_1), v = F_2(y_2) maps every integral onto the unit square with the
Gamma densities absorbed into the measure, leaving smooth integrands:

    phi_l  = gamma_l^2  sum_j  II  (c_l^2 / c)(u,v) D_l(.)^2 du dv
    phi_12 = gamma_1 gamma_2 sum_j II [ (c_1 c_2 / c)(u,v) D_1(u) D_2(v)
                                        - c(u,v) R_1(u) R_2(v) ] du dv

with D_l the shape-rate derivative of the marginal CDF at the u-th quantile
and R_l the shape-rate derivative of the log density.  The copula factor
matrices depend only on (copula, rule) and the per-axis arrays only on
(component, interval, stress), so both are cached; identical intervals are
grouped so equidistant plans evaluate one interval and multiply by k.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

import numpy as np

from . import copula as cop
from .copula import CopulaSpec
from .design_types import Design
from .errors import DomainError
from .gamma_marginal import BivariateModel, MarginalParams, TimePlan, shape_rate
from .quadrature import QuadratureRule, axis_nodes
from .specfun import (GammaShapeScale, digamma, gamma_cdf_dshape,
                      gamma_quantile, trigamma)

__all__ = [
    "lambda_marginal",
    "marginal_info",
    "info_independent",
    "info_copula",
    "phi_l",
    "phi_12",
    "info_design",
]


def lambda_marginal(p: MarginalParams, plan: TimePlan, x) -> float:
    """Marginal information weight lambda(x) = gamma(x)^2 sum_j Delta_j^2 psi_1(gamma(x) Delta_j)."""
    g = float(shape_rate(p, x))
    deltas = np.asarray(plan.increments)
    return float(g * g * np.sum(deltas**2 * trigamma(g * deltas)))


def marginal_info(p: MarginalParams, plan: TimePlan, x) -> np.ndarray:
    """2x2 marginal elemental matrix lambda(x) (1, x)'(1, x)."""
    u = np.array([1.0, float(x)])
    return lambda_marginal(p, plan, x) * np.outer(u, u)


def info_independent(model: BivariateModel, x) -> np.ndarray:
    """4x4 elemental matrix of the independence model: block-diagonal marginals."""
    x1, x2 = _as_pair(x)
    M = np.zeros((4, 4))
    M[:2, :2] = marginal_info(model.comp1, model.plan, x1)
    M[2:, 2:] = marginal_info(model.comp2, model.plan, x2)
    return M


def _as_pair(x):
    x1, x2 = x
    return float(x1), float(x2)


@lru_cache(maxsize=16)
def _copula_tables(spec: CopulaSpec, rule: QuadratureRule):
    """Node-grid copula factor matrices; independent of model and stress."""
    u, w = axis_nodes(rule)
    U, V = np.meshgrid(u, u, indexing="ij")
    c = cop.density(spec, U, V)
    c1 = cop.density_dr(spec, U, V)
    c2 = cop.density_ds(spec, U, V)
    tables = {
        "u": u,
        "w": w,
        "c": c,
        "a11": c1 * c1 / c,
        "a22": c2 * c2 / c,
        "a12": c1 * c2 / c,
    }
    for m in tables.values():
        m.setflags(write=False)
    return tables


@lru_cache(maxsize=8192)
def _margin_arrays(p: MarginalParams, delta: float, x: float, rule: QuadratureRule):
    """Per-axis arrays at the quadrature nodes for one (component, interval, stress).

    Returns (D, R): the CDF and log-density shape-rate derivatives evaluated at
    the node quantiles y(u) of the increment distribution.
    """
    u, _ = axis_nodes(rule)
    g = float(shape_rate(p, x))
    dist = GammaShapeScale(shape=g * delta, scale=p.scale)
    y = gamma_quantile(u, dist)
    D = gamma_cdf_dshape(y, dist, delta)
    R = delta * (np.log(y / p.scale) - digamma(dist.shape))
    D.setflags(write=False)
    R.setflags(write=False)
    return D, R


def _grouped_increments(plan: TimePlan):
    # intervals equal to 12 decimals share quadrature tables (equidistant fast path)
    return Counter(round(d, 12) for d in plan.increments)


def _phi_values(model: BivariateModel, spec: CopulaSpec, x, rule: QuadratureRule):
    x1, x2 = _as_pair(x)
    if spec.is_independence:
        return 0.0, 0.0, 0.0
    t = _copula_tables(spec, rule)
    w = t["w"]
    phi1 = phi2 = phi12 = 0.0
    for delta, mult in sorted(_grouped_increments(model.plan).items()):
        D1, R1 = _margin_arrays(model.comp1, delta, x1, rule)
        D2, R2 = _margin_arrays(model.comp2, delta, x2, rule)
        phi1 += mult * float((w * D1 * D1) @ t["a11"] @ w)
        phi2 += mult * float(w @ t["a22"] @ (w * D2 * D2))
        phi12 += mult * (
            float((w * D1) @ t["a12"] @ (w * D2))
            - float((w * R1) @ t["c"] @ (w * R2))
        )
    g1 = float(shape_rate(model.comp1, x1))
    g2 = float(shape_rate(model.comp2, x2))
    return g1 * g1 * phi1, g2 * g2 * phi2, g1 * g2 * phi12


def phi_l(model: BivariateModel, spec: CopulaSpec, x, l: int,
          rule: QuadratureRule = QuadratureRule()) -> float:
    """Dependence contribution phi_l >= 0 to the l-th diagonal block."""
    if l not in (1, 2):
        raise DomainError(f"component index must be 1 or 2, got {l}")
    vals = _phi_values(model, spec, x, rule)
    return vals[l - 1]


def phi_12(model: BivariateModel, spec: CopulaSpec, x,
           rule: QuadratureRule = QuadratureRule()) -> float:
    """Dependence contribution to the off-diagonal block (any sign)."""
    return _phi_values(model, spec, x, rule)[2]


def info_copula(model: BivariateModel, spec: CopulaSpec, x,
                rule: QuadratureRule = QuadratureRule()) -> np.ndarray:
    """4x4 elemental matrix of the copula model: H(x) + independence part.

    Reduces exactly to :func:`info_independent` under the independence copula
    (all phi terms vanish identically).
    """
    x1, x2 = _as_pair(x)
    M = info_independent(model, x)
    if spec.is_independence:
        return M
    p1, p2, p12 = _phi_values(model, spec, x, rule)
    u1 = np.array([1.0, x1])
    u2 = np.array([1.0, x2])
    M[:2, :2] += p1 * np.outer(u1, u1)
    M[2:, 2:] += p2 * np.outer(u2, u2)
    M[:2, 2:] += p12 * np.outer(u1, u2)
    M[2:, :2] = M[:2, 2:].T
    return M


def info_design(elemental, design: Design) -> np.ndarray:
    """Design information M(xi) = sum_i w_i M(x_i).

    ``elemental`` maps a support point to its elemental matrix (mapping or
    callable).  Weights must be positive and sum to 1 within 1e-9.
    """
    weights = np.asarray(design.weights, dtype=float)
    if abs(weights.sum() - 1.0) > 1e-9:
        raise DomainError(f"design weights sum to {weights.sum()}, expected 1")
    if np.any(weights <= 0):
        raise DomainError("design weights must be positive")
    get = elemental.__getitem__ if hasattr(elemental, "__getitem__") else elemental
    M = None
    for pt, w in zip(design.support, weights):
        Mi = np.asarray(get(pt), dtype=float)
        M = w * Mi if M is None else M + w * Mi
    return M
