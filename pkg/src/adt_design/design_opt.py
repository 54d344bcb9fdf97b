"""Approximate-design optimization on a discretized design region.

The multiplicative algorithm iterates w_i <- w_i (psi_i / sum_j w_j psi_j)^d,
where psi_i is the criterion sensitivity at the i-th grid point: tr(M_i M^-1)
for D-optimality (d = 1) and (M^-1 c)' M_i (M^-1 c) for c-optimality
(d = 1/2).  Both exponents give monotone criterion improvement.  Convergence
is certified through the general-equivalence-theorem gap evaluated on the
full grid:

    D:  max_x tr(M(x) M(xi)^-1) - p          <= tolerance
    c:  max_x (c'M^-1 M(x) M^-1 c)/(c'M^-1c) - 1 <= tolerance

A certified gap of zero is exact local optimality on the grid; the default
tolerance is 1e-4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .design_types import CriterionSpec, Design, Grid, OptimizerOptions
from .errors import DomainError, InfeasibleDesignError
from .failure_time import c_criterion
from .gamma_marginal import MarginalParams, TimePlan
from .fisher import lambda_marginal

__all__ = [
    "Design",
    "Grid",
    "CriterionSpec",
    "OptimizerOptions",
    "OptimizationResult",
    "multiplicative_optimize",
    "d_criterion",
    "equivalence_gap",
    "elfving_marginal_weight",
    "product_design",
    "marginalize",
    "efficiency",
]


@dataclass(frozen=True)
class OptimizationResult:
    """Outcome of a design optimization.

    ``certified`` is True when the final design's equivalence gap on the full
    grid is within tolerance; otherwise the design is returned with
    ``certified`` False and the achieved gap (non-convergence warning).
    ``merged`` records post-convergence support clustering as
    (from_point, into_point, weight) triples.
    """

    design: Design
    certified: bool
    gap: float
    criterion_value: float
    iterations: int
    merged: tuple = ()


def d_criterion(M) -> float:
    """Log determinant of an information matrix; -inf when (numerically)
    singular.  Eigenvalue-based so rank deficiency is detected reliably."""
    M = np.asarray(M, dtype=float)
    evals = np.linalg.eigvalsh(0.5 * (M + M.T))
    if evals.min() <= evals.max() * 1e-12:
        return -math.inf
    return float(np.sum(np.log(evals)))


def _stack_elementals(elemental, points):
    get = elemental.__getitem__ if hasattr(elemental, "__getitem__") else elemental
    return np.array([np.asarray(get(pt), dtype=float) for pt in points])


def _sensitivities(Ms, M, crit: CriterionSpec):
    """Per-point sensitivities and their design average."""
    if crit.kind == "D":
        Minv = np.linalg.inv(M)
        psi = np.einsum("ijk,kj->i", Ms, Minv)
        return psi, float(M.shape[0])
    c = np.asarray(crit.coefficient)
    z = np.linalg.solve(M, c)
    psi = np.einsum("j,ijk,k->i", z, Ms, z)
    return psi, float(c @ z)


def _criterion_value(M, crit: CriterionSpec) -> float:
    if crit.kind == "D":
        return d_criterion(M)
    return c_criterion(M, np.asarray(crit.coefficient))


def _gap_of(Ms, w, crit: CriterionSpec):
    M = np.einsum("i,ijk->jk", w, Ms)
    psi, denom = _sensitivities(Ms, M, crit)
    if crit.kind == "D":
        return float(psi.max() - denom), M
    return float(psi.max() / denom - 1.0), M


def _cluster(points, w, grid: Grid, threshold: float):
    """Merge converged weights below ``threshold`` into an adjacent dominant
    grid point (Euclidean distance of at most one grid step)."""
    step = grid.increment * (1 + 1e-9)
    pts = [np.atleast_1d(np.asarray(p, dtype=float)) for p in points]
    merged = []
    w = w.copy()
    small = [i for i in np.nonzero(w)[0] if w[i] < threshold]
    for i in small:
        best, best_w = None, threshold
        for j in np.nonzero(w)[0]:
            if j == i:
                continue
            if np.linalg.norm(pts[i] - pts[j]) <= step and w[j] > best_w:
                best, best_w = j, w[j]
        if best is not None:
            merged.append((points[i], points[best], float(w[i])))
            w[best] += w[i]
            w[i] = 0.0
    return w, tuple(merged)


def multiplicative_optimize(
    elemental,
    crit: CriterionSpec,
    grid: Grid,
    options: OptimizerOptions = OptimizerOptions(),
    ndim: int = 2,
) -> OptimizationResult:
    """Run the multiplicative algorithm on the grid and certify the result.

    ``elemental`` maps a grid point (float for ndim=1, pair for ndim=2) to its
    elemental information matrix; it is evaluated once per grid point.  The
    returned design carries only the support surviving pruning and clustering,
    sorted lexicographically.  Raises :class:`InfeasibleDesignError` when the
    uniform design on the grid is already non-informative for the criterion.
    """
    points = sorted(grid.points(ndim))
    Ms = _stack_elementals(elemental, points)
    n = len(points)
    w = np.full(n, 1.0 / n)

    gap, M = _gap_of(Ms, w, crit)
    if not math.isfinite(_criterion_value(M, crit)):
        raise InfeasibleDesignError(
            "uniform design on the grid gives a non-estimable criterion")

    exponent = 1.0 if crit.kind == "D" else 0.5
    last_value = _criterion_value(M, crit) if options.debug else None
    certified = gap <= options.tolerance
    iterations = 0
    while not certified and iterations < options.max_iterations:
        psi, denom = _sensitivities(Ms, M, crit)
        w = w * (psi / denom) ** exponent
        w[w < options.prune_threshold] = 0.0
        w /= w.sum()
        iterations += 1
        gap, M = _gap_of(Ms, w, crit)
        if options.debug:
            value = _criterion_value(M, crit)
            better = value >= last_value - 1e-9 * abs(last_value) if crit.kind == "D" \
                else value <= last_value + 1e-9 * abs(last_value)
            assert better, f"criterion worsened at iteration {iterations}"
            last_value = value
        certified = gap <= options.tolerance

    w, merged = _cluster(points, w, grid, options.cluster_threshold)
    keep = w > 0
    design = Design([points[i] for i in np.nonzero(keep)[0]], w[keep]).sorted()
    # report the gap of the design actually returned
    w_final = np.zeros(n)
    for pt, wi in zip(design.support, design.weights):
        w_final[points.index(pt)] = wi
    gap, M = _gap_of(Ms, w_final, crit)
    return OptimizationResult(
        design=design,
        certified=gap <= options.tolerance,
        gap=gap,
        criterion_value=_criterion_value(M, crit),
        iterations=iterations,
        merged=merged,
    )


def equivalence_gap(elemental, crit: CriterionSpec, design: Design, grid: Grid,
                    ndim: int = 2) -> float:
    """Equivalence-theorem gap of ``design`` over the full grid (>= 0 up to
    rounding; a value within tolerance certifies local optimality)."""
    points = sorted(grid.points(ndim))
    Ms = _stack_elementals(elemental, points)
    get = elemental.__getitem__ if hasattr(elemental, "__getitem__") else elemental
    M = None
    for pt, wi in zip(design.support, design.weights):
        Mi = np.asarray(get(pt), dtype=float)
        M = wi * Mi if M is None else M + wi * Mi
    if not math.isfinite(_criterion_value(M, crit)):
        raise InfeasibleDesignError("design is not criterion-feasible")
    psi, denom = _sensitivities(Ms, M, crit)
    if crit.kind == "D":
        return float(psi.max() - denom)
    return float(psi.max() / denom - 1.0)


def elfving_marginal_weight(p: MarginalParams, plan: TimePlan, x_u: float) -> float:
    """Closed-form optimal weight on stress 0 of the two-point marginal design.

    For a use condition x_u < 0 the c-optimal marginal design is supported on
    {0, 1} with weight

        w* = (1+|x_u|) sqrt(lambda(1)) /
             ((1+|x_u|) sqrt(lambda(1)) + |x_u| sqrt(lambda(0)))

    on stress 0.
    """
    if not x_u < 0:
        raise DomainError(f"the two-point form assumes x_u < 0, got {x_u}")
    lam0 = lambda_marginal(p, plan, 0.0)
    lam1 = lambda_marginal(p, plan, 1.0)
    a = (1.0 + abs(x_u)) * math.sqrt(lam1)
    return a / (a + abs(x_u) * math.sqrt(lam0))


def product_design(xi1: Design, xi2: Design) -> Design:
    """Product of two marginal designs: Cartesian support, multiplied weights."""
    if xi1.dim != 1 or xi2.dim != 1:
        raise DomainError("product_design expects marginal (1-D) designs")
    support, weights = [], []
    for p1, w1 in zip(xi1.support, xi1.weights):
        for p2, w2 in zip(xi2.support, xi2.weights):
            support.append((p1, p2))
            weights.append(w1 * w2)
    return Design(support, weights).sorted()


def marginalize(design: Design) -> tuple[Design, Design]:
    """Project a bivariate design onto its two marginal designs."""
    if design.dim != 2:
        raise DomainError("marginalize expects a bivariate design")
    acc1, acc2 = {}, {}
    for (x1, x2), w in zip(design.support, design.weights):
        acc1[x1] = acc1.get(x1, 0.0) + w
        acc2[x2] = acc2.get(x2, 0.0) + w
    xi1 = Design(sorted(acc1), [acc1[k] for k in sorted(acc1)])
    xi2 = Design(sorted(acc2), [acc2[k] for k in sorted(acc2)])
    return xi1, xi2


def efficiency(candidate: Design, optimal: Design, crit: CriterionSpec,
               elemental) -> float:
    """Criterion efficiency of ``candidate`` relative to ``optimal`` in (0, 1].

    c-criterion: value(optimal) / value(candidate); D-criterion: the p-th root
    of the determinant ratio.  An infeasible candidate scores 0 by convention.
    """
    get = elemental.__getitem__ if hasattr(elemental, "__getitem__") else elemental

    def design_matrix(d: Design):
        M = None
        for pt, wi in zip(d.support, d.weights):
            Mi = np.asarray(get(pt), dtype=float)
            M = wi * Mi if M is None else M + wi * Mi
        return M

    M_c = design_matrix(candidate)
    M_o = design_matrix(optimal)
    if crit.kind == "D":
        ld_c, ld_o = d_criterion(M_c), d_criterion(M_o)
        if not math.isfinite(ld_c):
            return 0.0
        return float(math.exp((ld_c - ld_o) / M_c.shape[0]))
    v_c = c_criterion(M_c, np.asarray(crit.coefficient))
    v_o = c_criterion(M_o, np.asarray(crit.coefficient))
    if not math.isfinite(v_c):
        return 0.0
    return float(v_o / v_c)
