"""Value types shared between the information-matrix and optimizer layers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

__all__ = ["Design", "Grid", "CriterionSpec", "OptimizerOptions"]


def _norm_point(pt):
    if np.ndim(pt) == 0:
        return float(pt)
    return tuple(float(c) for c in pt)


@dataclass(frozen=True)
class Design:
    """Approximate design: finite support with positive weights summing to 1.

    Support points are floats (marginal designs on [0,1]) or coordinate pairs
    (designs on [0,1]^2).  Weights are renormalized exactly at construction;
    an input weight sum off by more than 1e-9 is rejected.
    """

    support: tuple
    weights: tuple

    def __init__(self, support, weights):
        support = tuple(_norm_point(p) for p in support)
        w = np.asarray(list(weights), dtype=float)
        if len(support) != len(w):
            raise DomainError("support and weights differ in length")
        if len(support) == 0:
            raise DomainError("design needs at least one support point")
        if np.any(w <= 0):
            raise DomainError(f"design weights must be positive, got {w}")
        if abs(w.sum() - 1.0) > 1e-9:
            raise DomainError(f"design weights sum to {w.sum():.12g}, expected 1")
        if len(set(support)) != len(support):
            raise DomainError("support points must be pairwise distinct")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "weights", tuple(w / w.sum()))

    @property
    def dim(self) -> int:
        return 1 if np.ndim(self.support[0]) == 0 else len(self.support[0])

    def weight_of(self, point, tol: float = 1e-9) -> float:
        """Weight at a point (0 if absent); coordinates compared within tol."""
        target = _norm_point(point)
        for pt, w in zip(self.support, self.weights):
            d = abs(pt - target) if self.dim == 1 else max(
                abs(a - b) for a, b in zip(pt, target))
            if d <= tol:
                return w
        return 0.0

    def sorted(self) -> "Design":
        order = np.lexsort(
            np.array([[p] if self.dim == 1 else list(p) for p in self.support]).T[::-1]
        )
        return Design([self.support[i] for i in order],
                      [self.weights[i] for i in order])


@dataclass(frozen=True)
class Grid:
    """Equidistant marginal grid on [0,1] with the induced product grid on [0,1]^2.

    The increment must divide 1 exactly (within 1e-12).
    """

    increment: float = 0.05

    def __post_init__(self):
        if not 0 < self.increment <= 1:
            raise DomainError(f"grid increment must lie in (0, 1], got {self.increment}")
        n = round(1.0 / self.increment)
        if abs(n * self.increment - 1.0) > 1e-12:
            raise DomainError(
                f"grid increment {self.increment} does not divide 1 within 1e-12")

    @property
    def n_intervals(self) -> int:
        return round(1.0 / self.increment)

    def points_1d(self) -> tuple:
        return tuple(float(v) for v in np.linspace(0.0, 1.0, self.n_intervals + 1))

    def points_2d(self) -> tuple:
        axis = self.points_1d()
        return tuple((a, b) for a in axis for b in axis)

    def points(self, ndim: int) -> tuple:
        if ndim == 1:
            return self.points_1d()
        if ndim == 2:
            return self.points_2d()
        raise DomainError(f"ndim must be 1 or 2, got {ndim}")


@dataclass(frozen=True)
class CriterionSpec:
    """Design criterion: ``D`` (maximize log det) or ``c`` (minimize c' M^-1 c)."""

    kind: str
    coefficient: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("D", "c"):
            raise DomainError(f"criterion kind must be 'D' or 'c', got {self.kind!r}")
        if self.kind == "c":
            if self.coefficient is None:
                raise DomainError("c-criterion requires a coefficient vector")
            c = np.asarray(self.coefficient, dtype=float)
            if not np.any(c != 0):
                raise DomainError("c-criterion coefficient vector must be nonzero")
            object.__setattr__(self, "coefficient", tuple(float(v) for v in c))
        elif self.coefficient is not None:
            raise DomainError("D-criterion takes no coefficient vector")

    @staticmethod
    def d_optimality() -> "CriterionSpec":
        return CriterionSpec("D")

    @staticmethod
    def c_optimality(coefficient) -> "CriterionSpec":
        return CriterionSpec("c", tuple(np.asarray(coefficient, dtype=float)))


@dataclass(frozen=True)
class OptimizerOptions:
    """Multiplicative-algorithm controls.

    ``tolerance`` bounds the equivalence gap at convergence; weights below
    ``prune_threshold`` are removed during iteration; converged weights below
    ``cluster_threshold`` are merged into an adjacent dominant grid point.
    ``debug`` enables the per-iteration monotonicity assertion.
    """

    tolerance: float = 1e-4
    max_iterations: int = 20_000
    prune_threshold: float = 1e-6
    cluster_threshold: float = 1e-3
    debug: bool = False

    def __post_init__(self):
        if self.tolerance <= 0:
            raise DomainError("tolerance must be positive")
        if self.max_iterations < 1:
            raise DomainError("max_iterations must be at least 1")
