"""Single-measurement binary-outcome model (one observation time).

Each component is observed once and reduced to whether its degradation has
reached its threshold, giving a 2x2 table of cell probabilities driven by the
copula of the increment pair.  Cells are indexed (u, v) in {1, 2}^2 in
lexicographic order (P11, P12, P21, P22), where index 1 means "failed at the
observation time": P11 is the joint failure probability, P22 the joint
survival C(F1, F2).

The Fisher information factorizes through the two shape rates:
M = A B diag(1/P) B' A' with A = dgamma/dbeta (4x2) and B = dP/dgamma (2x4),
so each elemental matrix has rank at most 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import copula as cop
from .copula import CopulaSpec
from .errors import DegenerateCellError, DomainError, NumericalError
from .failure_time import UseConditions
from .gamma_marginal import BivariateModel, shape_rate
from .specfun import GammaShapeScale, gamma_cdf, gamma_cdf_dshape

__all__ = [
    "BinaryScenario",
    "CELL_LABELS",
    "cell_probs",
    "cell_probs_dgamma",
    "info_binary",
    "p11_use_gradient",
]

CELL_LABELS = ("P11", "P12", "P21", "P22")

_MIN_CELL = 1e-12


@dataclass(frozen=True)
class BinaryScenario:
    """Binary-outcome experiment: a single-time-point model, a copula, and the
    two failure thresholds."""

    model: BivariateModel
    spec: CopulaSpec
    thresholds: tuple[float, float]

    def __post_init__(self):
        object.__setattr__(self, "thresholds",
                           tuple(float(z) for z in self.thresholds))
        if self.model.plan.k != 1:
            raise DomainError(
                f"binary model requires a single observation time, plan has k={self.model.plan.k}")
        if any(z <= 0 for z in self.thresholds):
            raise DomainError(f"thresholds must be positive, got {self.thresholds}")

    @property
    def delta(self) -> float:
        return self.model.plan.increments[0]


def _marginal_cdf_and_dshape(sc: BinaryScenario, comp, x, z):
    g = float(shape_rate(comp, x))
    dist = GammaShapeScale(shape=g * sc.delta, scale=comp.scale)
    F = float(gamma_cdf(z, dist))
    dF = float(gamma_cdf_dshape(z, dist, sc.delta))
    return g, F, dF


def cell_probs(sc: BinaryScenario, x) -> np.ndarray:
    """The four cell probabilities (P11, P12, P21, P22); sums to 1 exactly.

    P22 = C(F1, F2), P12 = F2 - C, P21 = F1 - C, and P11 is computed as the
    complement so the sum is exact in floating point.
    """
    x1, x2 = float(x[0]), float(x[1])
    _, F1, _ = _marginal_cdf_and_dshape(sc, sc.model.comp1, x1, sc.thresholds[0])
    _, F2, _ = _marginal_cdf_and_dshape(sc, sc.model.comp2, x2, sc.thresholds[1])
    C = float(cop.cdf(sc.spec, F1, F2))
    p22 = C
    p12 = F2 - C
    p21 = F1 - C
    cells = [p12, p21, p22]
    for i, p in enumerate(cells):
        if p < -_MIN_CELL:
            raise NumericalError(
                f"copula-inconsistent cell probability {CELL_LABELS[i + 1]} = {p:.3e}")
        cells[i] = max(p, 0.0)
    p12, p21, p22 = cells
    p11 = 1.0 - p12 - p21 - p22
    if p11 < -_MIN_CELL:
        raise NumericalError(f"copula-inconsistent cell probability P11 = {p11:.3e}")
    return np.array([max(p11, 0.0), p12, p21, p22])


def cell_probs_dgamma(sc: BinaryScenario, x) -> np.ndarray:
    """2x4 matrix of cell-probability derivatives in the two shape rates.

    Row l holds dP_uv/dgamma_l in cell order (P11, P12, P21, P22); each row
    sums to zero because the cells sum to one identically.
    """
    x1, x2 = float(x[0]), float(x[1])
    _, F1, dF1 = _marginal_cdf_and_dshape(sc, sc.model.comp1, x1, sc.thresholds[0])
    _, F2, dF2 = _marginal_cdf_and_dshape(sc, sc.model.comp2, x2, sc.thresholds[1])
    dC1 = float(cop.cdf_dr(sc.spec, F1, F2)) * dF1
    dC2 = float(cop.cdf_ds(sc.spec, F1, F2)) * dF2
    return np.array([
        [-dF1 + dC1, -dC1, dF1 - dC1, dC1],
        [-dF2 + dC2, dF2 - dC2, -dC2, dC2],
    ])


def info_binary(sc: BinaryScenario, x) -> np.ndarray:
    """4x4 elemental information matrix A B diag(1/P) B' A' (rank <= 2).

    Raises :class:`DegenerateCellError` naming the cell when any probability
    falls below 1e-12: the 1/P weighting is then meaningless and the caller
    must treat the stress point as unusable.
    """
    x1, x2 = float(x[0]), float(x[1])
    P = cell_probs(sc, x)
    if np.any(P <= _MIN_CELL):
        bad = CELL_LABELS[int(np.argmin(P))]
        raise DegenerateCellError(
            f"cell {bad} has probability {P.min():.3e} at stress ({x1}, {x2})")
    B = cell_probs_dgamma(sc, x)
    g1 = float(shape_rate(sc.model.comp1, x1))
    g2 = float(shape_rate(sc.model.comp2, x2))
    A = np.array([[g1, 0.0], [x1 * g1, 0.0], [0.0, g2], [0.0, x2 * g2]])
    core = (B / P) @ B.T
    return A @ core @ A.T


def p11_use_gradient(sc: BinaryScenario, uc: UseConditions) -> np.ndarray:
    """Gradient of the joint failure probability P11 at the use conditions
    with respect to beta = (b11, b21, b12, b22).

    Entries two and four equal entries one and three scaled by the use
    stresses; this is the coefficient vector of the binary c-criterion.
    """
    xu = uc.x_u
    B = cell_probs_dgamma(sc, xu)
    g1 = float(shape_rate(sc.model.comp1, xu[0]))
    g2 = float(shape_rate(sc.model.comp2, xu[1]))
    c1 = g1 * B[0, 0]
    c2 = g2 * B[1, 0]
    return np.array([c1, c1 * xu[0], c2, c2 * xu[1]])
