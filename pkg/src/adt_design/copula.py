"""Bivariate copulas: independence, Frank, and Gaussian.

Each family provides the CDF ``C``, density ``c``, the first partials of the
density (``c_1 = dc/dr``, ``c_2 = dc/ds``) and of the CDF (``C_1 = dC/dr``,
``C_2 = dC/ds``).  The second member of each partial pair follows from the
exchange symmetry c_2(r, s) = c_1(s, r), C_2(r, s) = C_1(s, r), which holds
for all three families.

Frank expressions are written with expm1/log1p so they stay accurate down to
|kappa| ~ 1e-8 (the independence limit).  The Gaussian density is unbounded at
the corners of the unit square, so density-type evaluators clamp their inputs
to [1e-12, 1 - 1e-12]; quadrature nodes never touch the corners, the clamp
only protects direct user calls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import DomainError
from .quadrature import QuadratureRule, axis_nodes

__all__ = [
    "CopulaSpec",
    "cdf",
    "density",
    "density_dr",
    "density_ds",
    "cdf_dr",
    "cdf_ds",
    "conditional_quantile",
    "std_normal_cdf",
    "std_normal_pdf",
    "std_normal_quantile",
]

_CLAMP = 1e-12

INDEPENDENCE = "independence"
FRANK = "frank"
GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class CopulaSpec:
    """Tagged copula choice: independence, Frank(kappa != 0), Gaussian(|rho| < 1)."""

    family: str
    parameter: float = 0.0

    def __post_init__(self):
        if self.family == INDEPENDENCE:
            return
        if self.family == FRANK:
            if self.parameter == 0.0 or not math.isfinite(self.parameter):
                raise DomainError("Frank copula requires a nonzero finite parameter")
        elif self.family == GAUSSIAN:
            if not (-1.0 < self.parameter < 1.0):
                raise DomainError(
                    f"Gaussian copula requires |rho| < 1, got {self.parameter}"
                )
        else:
            raise DomainError(f"unknown copula family {self.family!r}")

    @staticmethod
    def independence() -> "CopulaSpec":
        return CopulaSpec(INDEPENDENCE)

    @staticmethod
    def frank(kappa: float) -> "CopulaSpec":
        return CopulaSpec(FRANK, float(kappa))

    @staticmethod
    def gaussian(rho: float) -> "CopulaSpec":
        return CopulaSpec(GAUSSIAN, float(rho))

    @property
    def is_independence(self) -> bool:
        return self.family == INDEPENDENCE


def std_normal_cdf(x):
    """Standard normal distribution function Phi."""
    out = special.ndtr(np.asarray(x, dtype=float))
    return out[()] if np.ndim(out) == 0 else out


def std_normal_pdf(x):
    """Standard normal density phi."""
    x = np.asarray(x, dtype=float)
    out = np.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)
    return out[()] if np.ndim(out) == 0 else out


def std_normal_quantile(u):
    """Inverse of Phi on (0, 1)."""
    u = np.asarray(u, dtype=float)
    if np.any(u <= 0) or np.any(u >= 1):
        raise DomainError(f"u must lie strictly inside (0, 1), got {u}")
    out = special.ndtri(u)
    return out[()] if np.ndim(out) == 0 else out


def _clamped(r):
    return np.clip(np.asarray(r, dtype=float), _CLAMP, 1.0 - _CLAMP)


def _check_unit(r, s):
    r = np.asarray(r, dtype=float)
    s = np.asarray(s, dtype=float)
    if np.any(r < 0) or np.any(r > 1) or np.any(s < 0) or np.any(s > 1):
        raise DomainError("copula arguments must lie in [0, 1]")
    return r, s


# internal Gauss-Legendre rule for the Gaussian copula CDF integral
_GAUSS_CDF_RULE = QuadratureRule(nodes_per_axis=48, panels=2)
_GAUSS_CDF_LO = -8.5


def _gaussian_cdf(r, s, rho):
    # C(r,s) = int_{-inf}^{ndtri(r)} Phi((b - rho z)/sqrt(1-rho^2)) phi(z) dz
    shape = np.broadcast_shapes(np.shape(r), np.shape(s))
    a = np.broadcast_to(special.ndtri(_clamped(r)), shape).ravel()
    b = np.broadcast_to(special.ndtri(_clamped(s)), shape).ravel()
    x01, w01 = axis_nodes(_GAUSS_CDF_RULE)
    span = a - _GAUSS_CDF_LO
    z = _GAUSS_CDF_LO + span[:, None] * x01
    w = span[:, None] * w01
    inner = special.ndtr((b[:, None] - rho * z) / math.sqrt(1.0 - rho * rho))
    vals = np.sum(w * inner * np.exp(-0.5 * z * z), axis=-1) / math.sqrt(2.0 * math.pi)
    vals = vals.reshape(shape)
    return vals[()] if shape == () else vals


def cdf(spec: CopulaSpec, r, s):
    """Copula CDF C(r, s) with exact grounded boundaries.

    C(r, 0) = C(0, s) = 0, C(r, 1) = r, C(1, s) = s for every family.
    """
    r, s = _check_unit(r, s)
    if spec.is_independence:
        out = r * s
    elif spec.family == FRANK:
        k = spec.parameter
        out = -np.log1p(np.expm1(-k * r) * np.expm1(-k * s) / np.expm1(-k)) / k
    else:
        out = _gaussian_cdf(r, s, spec.parameter)
        # pin the boundaries exactly; the integral only approaches them
        out = np.where(r <= 0, 0.0, out)
        out = np.where(s <= 0, 0.0, out)
        out = np.where(r >= 1, s, out)
        out = np.where(s >= 1, np.where(r >= 1, 1.0, r), out)
    out = np.asarray(out)
    return out[()] if np.ndim(r) == 0 and np.ndim(s) == 0 else out


def density(spec: CopulaSpec, r, s):
    """Copula density c(r, s) = d^2 C / dr ds > 0; inputs clamped off corners."""
    r, s = _check_unit(r, s)
    r = _clamped(r)
    s = _clamped(s)
    if spec.is_independence:
        out = np.ones(np.broadcast(r, s).shape)
    elif spec.family == FRANK:
        k = spec.parameter
        base = -np.expm1(-k) - np.expm1(-k * r) * np.expm1(-k * s)
        out = k * (-np.expm1(-k)) * np.exp(-k * (r + s)) / base**2
    else:
        rho = spec.parameter
        a = special.ndtri(r)
        b = special.ndtri(s)
        q = rho * rho * (a * a + b * b) - 2.0 * rho * a * b
        out = np.exp(-q / (2.0 * (1.0 - rho * rho))) / math.sqrt(1.0 - rho * rho)
    return out[()] if np.ndim(r) == 0 and np.ndim(s) == 0 else out


def density_dr(spec: CopulaSpec, r, s):
    """First partial of the density in its first argument, c_1 = dc/dr."""
    r, s = _check_unit(r, s)
    r = _clamped(r)
    s = _clamped(s)
    if spec.is_independence:
        out = np.zeros(np.broadcast(r, s).shape)
    elif spec.family == FRANK:
        k = spec.parameter
        base = -np.expm1(-k) - np.expm1(-k * r) * np.expm1(-k * s)
        num = (1.0 + np.exp(-k * r)) * (-np.expm1(-k * s)) - (-np.expm1(-k))
        out = k * k * (-np.expm1(-k)) * np.exp(-k * (r + s)) * num / base**3
    else:
        rho = spec.parameter
        a = special.ndtri(r)
        b = special.ndtri(s)
        phi_a = np.exp(-0.5 * a * a) / math.sqrt(2.0 * math.pi)
        out = rho / (1.0 - rho * rho) * density(spec, r, s) * (b - rho * a) / phi_a
    return out[()] if np.ndim(r) == 0 and np.ndim(s) == 0 else out


def density_ds(spec: CopulaSpec, r, s):
    """Second partial of the density, c_2(r, s) = c_1(s, r) by symmetry."""
    return density_dr(spec, s, r)


def cdf_dr(spec: CopulaSpec, r, s):
    """Partial C_1 = dC/dr: the conditional CDF of the second coordinate
    given the first; lies in [0, 1] and is nondecreasing in s."""
    r, s = _check_unit(r, s)
    r = _clamped(r)
    s = _clamped(s)
    if spec.is_independence:
        out = np.broadcast_to(s, np.broadcast(r, s).shape).copy()
    elif spec.family == FRANK:
        k = spec.parameter
        num = np.exp(-k * r) * np.expm1(-k * s)
        den = np.expm1(-k) + np.expm1(-k * r) * np.expm1(-k * s)
        out = num / den
    else:
        rho = spec.parameter
        a = special.ndtri(r)
        b = special.ndtri(s)
        out = special.ndtr((b - rho * a) / math.sqrt(1.0 - rho * rho))
    out = np.asarray(out)
    return out[()] if np.ndim(r) == 0 and np.ndim(s) == 0 else out


def cdf_ds(spec: CopulaSpec, r, s):
    """Partial C_2(r, s) = C_1(s, r) by symmetry."""
    return cdf_dr(spec, s, r)


def conditional_quantile(spec: CopulaSpec, r, p, iterations: int = 60):
    """Invert the conditional CDF: the s with C_1(r, s) = p, by bisection.

    Used for conditional-distribution sampling of dependent pairs; works for
    every family because C_1 is monotone in s.
    """
    r = np.asarray(r, dtype=float)
    p = np.asarray(p, dtype=float)
    shape = np.broadcast(r, p).shape
    lo = np.full(shape, _CLAMP)
    hi = np.full(shape, 1.0 - _CLAMP)
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        below = cdf_dr(spec, r, mid) < p
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    out = 0.5 * (lo + hi)
    return out[()] if shape == () else out
