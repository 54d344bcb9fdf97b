"""Locally optimal experimental designs for bivariate Gamma-process
accelerated degradation tests with independent or copula-dependent components.

The package computes elemental and design Fisher information matrices for
three model variants (independent margins, Frank/Gaussian copula dependence,
and the single-measurement binary reduction), optimizes D- and c-criteria on
a discretized stress region with the multiplicative algorithm, and certifies
every result through equivalence-theorem sensitivity checks.
"""

from .__about__ import __version__
from .binary_outcome import (BinaryScenario, cell_probs, cell_probs_dgamma,
                             info_binary, p11_use_gradient)
from .copula import CopulaSpec, cdf, cdf_dr, cdf_ds, density, density_dr, density_ds
from .design_opt import (CriterionSpec, Design, Grid, OptimizationResult,
                         OptimizerOptions, d_criterion, efficiency,
                         elfving_marginal_weight, equivalence_gap, marginalize,
                         multiplicative_optimize, product_design)
from .errors import (AdtDesignError, ConfigError, DegenerateCellError,
                     DomainError, InfeasibleDesignError, NumericalError)
from .failure_time import (UseConditions, c_criterion, c_vector,
                           marginal_failure_cdf, quantile, system_failure_cdf)
from .fisher import (info_copula, info_design, info_independent,
                     lambda_marginal, marginal_info, phi_12, phi_l)
from .gamma_marginal import (BivariateModel, MarginalParams, TimePlan,
                             increment_dist, increment_mean, shape_rate)
from .quadrature import QuadratureRule, integrate_1d, integrate_unit_square
from .scenarios import (ScenarioConfig, ScenarioResult, bundled_scenario_names,
                        bundled_scenario_path, load_config, run_scenario, sweep,
                        validate_config)
from .specfun import (GammaShapeScale, digamma, gamma_cdf, gamma_cdf_dshape,
                      gamma_pdf, gamma_pdf_dshape, gamma_quantile, log_gamma,
                      reg_gamma_q, reg_gamma_q_dshape, trigamma)

__all__ = [name for name in dir() if not name.startswith("_")]
