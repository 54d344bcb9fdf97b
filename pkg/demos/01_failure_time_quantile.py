"""Failure-time distribution of a two-component parallel system.

Sets up the independent bivariate Gamma degradation model at its nominal
parameter values, evaluates the marginal and system failure-time CDFs at the
normal use conditions, and locates the median failure time.
"""

import numpy as np

from adt_design import (BivariateModel, MarginalParams, TimePlan,
                        UseConditions, marginal_failure_cdf, quantile,
                        system_failure_cdf)

model = BivariateModel(
    comp1=MarginalParams(intercept=1.80, slope=1.60, scale=1.24),
    comp2=MarginalParams(intercept=2.80, slope=3.13, scale=1.17),
    plan=TimePlan([0.02, 0.06, 0.12, 0.22]),
)
uc = UseConditions(x_u=(-0.60, -0.50), thresholds=(4.6, 6.25), alpha=0.5)

print("Parallel-system failure time under normal use conditions")
print(f"  use stresses x_u = {uc.x_u}, thresholds z0 = {uc.thresholds}\n")

print("  t      F_T1(t)   F_T2(t)   F_T(t)")
for t in np.arange(0.5, 6.1, 0.5):
    f1 = marginal_failure_cdf(model.comp1, uc.x_u[0], uc.thresholds[0], t)
    f2 = marginal_failure_cdf(model.comp2, uc.x_u[1], uc.thresholds[1], t)
    ft = system_failure_cdf(model, uc, t)
    print(f"  {t:4.1f}   {f1:.4f}    {f2:.4f}    {ft:.4f}")

t_med = quantile(model, uc)
print(f"\nmedian failure time t_0.5 = {t_med:.4f}")
for alpha in (0.1, 0.9):
    t_a = quantile(model, UseConditions(uc.x_u, uc.thresholds, alpha))
    print(f"quantile at alpha={alpha}: t = {t_a:.4f}")
