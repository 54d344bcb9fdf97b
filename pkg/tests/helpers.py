"""Shared test oracles: finite differences, golden-section search, and
Monte Carlo samplers.  These deliberately avoid the code paths they are used
to check."""

from __future__ import annotations

import numpy as np

from adt_design import copula as cop
from adt_design.gamma_marginal import BivariateModel, MarginalParams, TimePlan


def central_diff(f, x, h):
    return (f(x + h) - f(x - h)) / (2.0 * h)


def fd_gradient(f, x0, h=1e-5):
    """Central-difference gradient of a scalar function of a vector."""
    x0 = np.asarray(x0, dtype=float)
    g = np.zeros_like(x0)
    for i in range(len(x0)):
        xp, xm = x0.copy(), x0.copy()
        xp[i] += h
        xm[i] -= h
        g[i] = (f(xp) - f(xm)) / (2.0 * h)
    return g


def golden_section_min(f, lo, hi, tol=1e-10):
    """Golden-section search for the minimum of a unimodal scalar function."""
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while abs(b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def sample_copula_pairs(spec, n, rng):
    """Draw dependent uniforms from the copula by conditional inversion."""
    u = rng.uniform(1e-12, 1 - 1e-12, n)
    p = rng.uniform(1e-12, 1 - 1e-12, n)
    v = cop.conditional_quantile(spec, u, p)
    return u, v


def gamma_increment_loglik(model: BivariateModel, spec, x, betas, ys):
    """Log-likelihood of bivariate increments as an explicit formula in the
    four rate parameters (b11, b21, b12, b22); vectorized over draws."""
    from scipy import special

    b11, b21, b12, b22 = betas
    x1, x2 = x
    g1 = np.exp(b11 + b21 * x1)
    g2 = np.exp(b12 + b22 * x2)
    nu1, nu2 = model.comp1.scale, model.comp2.scale
    total = 0.0
    for (y1, y2), delta in zip(ys, model.plan.increments):
        s1, s2 = g1 * delta, g2 * delta
        F1 = np.clip(special.gammainc(s1, y1 / nu1), 1e-12, 1 - 1e-12)
        F2 = np.clip(special.gammainc(s2, y2 / nu2), 1e-12, 1 - 1e-12)
        c = cop.density(spec, F1, F2)
        lf1 = (s1 - 1) * np.log(y1) - y1 / nu1 - special.gammaln(s1) - s1 * np.log(nu1)
        lf2 = (s2 - 1) * np.log(y2) - y2 / nu2 - special.gammaln(s2) - s2 * np.log(nu2)
        total = total + np.log(c) + lf1 + lf2
    return total


def simulate_increments(model: BivariateModel, spec, x, n, rng):
    """Dependent increment pairs for every interval of the plan."""
    from scipy import special

    x1, x2 = x
    g1 = np.exp(model.comp1.intercept + model.comp1.slope * x1)
    g2 = np.exp(model.comp2.intercept + model.comp2.slope * x2)
    ys = []
    for delta in model.plan.increments:
        u, v = sample_copula_pairs(spec, n, rng)
        y1 = special.gammaincinv(g1 * delta, u) * model.comp1.scale
        y2 = special.gammaincinv(g2 * delta, v) * model.comp2.scale
        ys.append((y1, y2))
    return ys


def score_covariance_copula(model: BivariateModel, spec, x, n, rng, h=1e-5):
    """Empirical covariance of the finite-difference score over simulated
    increments, with elementwise standard errors."""
    ys = simulate_increments(model, spec, x, n, rng)
    base = np.array([model.comp1.intercept, model.comp1.slope,
                     model.comp2.intercept, model.comp2.slope])
    # parameter order used by the information matrices: (b11, b21, b12, b22)
    scores = np.zeros((4, n))
    for i in range(4):
        bp, bm = base.copy(), base.copy()
        bp[i] += h
        bm[i] -= h
        scores[i] = (gamma_increment_loglik(model, spec, x, bp, ys)
                     - gamma_increment_loglik(model, spec, x, bm, ys)) / (2 * h)
    cov = np.cov(scores)
    prods = scores[:, None, :] * scores[None, :, :]
    se = np.sqrt(np.var(prods, axis=2) / n)
    return cov, se


def table1_model():
    return BivariateModel(
        MarginalParams(1.80, 1.60, 1.24),
        MarginalParams(2.80, 3.13, 1.17),
        TimePlan((0.02, 0.06, 0.12, 0.22)),
    )


def table2_model(plan_times=(0.05, 0.10, 0.15, 0.20)):
    return BivariateModel(
        MarginalParams(0.30, 0.90, 1.17),
        MarginalParams(0.80, 0.10, 1.15),
        TimePlan(plan_times),
    )
