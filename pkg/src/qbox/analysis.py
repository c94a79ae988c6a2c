"""Convergence sweeps over J0 and power-law fits of the deviations."""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .continuum import continuum_energy, continuum_uncertainties
from .core import DomainError, PhysicalParams, make_lattice
from .evolution import phase_drifts
from .observables import lattice_uncertainties
from .spectrum import q_energy

__all__ = [
    "Quantity",
    "PowerLawFit",
    "ConvergenceSeries",
    "fit_power_law",
    "richardson_coefficient",
    "deviation",
    "sweep",
    "fit_product_expansion",
]

# coarse points are dropped (once) when the log-log fit is worse than this
R2_REFIT_THRESHOLD = 0.999


class Quantity(enum.Enum):
    ENERGY = "energy"
    DELTA_P = "dp"
    DELTA_X2 = "dx2"
    PRODUCT = "product"
    PHASE = "phase"


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    coefficient: float
    r_squared: float

    def __iter__(self):
        return iter((self.exponent, self.coefficient, self.r_squared))


@dataclass(frozen=True)
class ConvergenceSeries:
    quantity: Quantity
    n: int
    J0s: tuple[int, ...]
    points: tuple[tuple[float, float], ...]
    fit: PowerLawFit
    refit: PowerLawFit | None
    extrapolated_coefficient: float

    @property
    def fitted_exponent(self) -> float:
        return self.fit.exponent

    @property
    def fitted_coefficient(self) -> float:
        return self.fit.coefficient

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity.value,
            "n": self.n,
            "points": [
                {"J0": J0, "lambda0": lam, "value": v} for J0, (lam, v) in zip(self.J0s, self.points)
            ],
            "fitted_exponent": self.fit.exponent,
            "fitted_coefficient": self.fit.coefficient,
            "r_squared": self.fit.r_squared,
            "refit": None if self.refit is None else {
                "fitted_exponent": self.refit.exponent,
                "fitted_coefficient": self.refit.coefficient,
                "r_squared": self.refit.r_squared,
            },
            "extrapolated_coefficient": self.extrapolated_coefficient,
        }

    def csv_table(self):
        rows = [[J0, lam, v] for J0, (lam, v) in zip(self.J0s, self.points)]
        return ["J0", "lambda0", "value"], rows


def fit_power_law(points) -> PowerLawFit:
    """Least squares of log(value) on log(lambda0): value ~ coefficient * lambda0**exponent."""
    pts = list(points)
    if len(pts) < 3:
        raise DomainError(f"need at least 3 points for a fit, got {len(pts)}")
    h = np.array([p[0] for p in pts], dtype=float)
    v = np.array([p[1] for p in pts], dtype=float)
    if np.any(h <= 0):
        raise DomainError("abscissae must be strictly positive")
    if np.any(~(v > 0)):
        raise DomainError(f"non-positive value in power-law fit: {v[~(v > 0)].tolist()}")
    X, Y = np.log(h), np.log(v)
    slope, intercept = np.polyfit(X, Y, 1)
    resid = Y - (slope * X + intercept)
    ss_tot = float(np.sum((Y - Y.mean()) ** 2))
    r2 = 1.0 - float(np.sum(resid**2)) / ss_tot if ss_tot > 0 else 1.0
    return PowerLawFit(float(slope), float(math.exp(intercept)), r2)


def richardson_coefficient(points, order: float) -> float:
    """Leading coefficient ``lim value / lambda0**order`` by Richardson extrapolation.

    The scaled values ``g = value / lambda0**order`` behave as ``C + D lambda0**q``.
    The three finest points estimate ``q`` and eliminate the ``D`` term; they
    must share a common refinement ratio.  Falls back to the finest scaled
    value when the differences are not consistent with a power-law tail.
    """
    pts = sorted(points, key=lambda p: -p[0])
    if len(pts) < 3:
        raise DomainError("need at least 3 points for Richardson extrapolation")
    (h1, v1), (h2, v2), (h3, v3) = pts[-3:]
    r = h1 / h2
    if not math.isclose(r, h2 / h3, rel_tol=1e-9):
        raise DomainError("Richardson extrapolation needs a constant refinement ratio")
    g1, g2, g3 = (v / h**order for h, v in ((h1, v1), (h2, v2), (h3, v3)))
    d12, d23 = g1 - g2, g2 - g3
    if d23 == 0 or d12 / d23 <= 1.0:
        return g3
    q = math.log(d12 / d23) / math.log(r)
    return g3 - d23 / (r**q - 1.0)


def deviation(quantity: Quantity, n: int, J0: int, params: PhysicalParams) -> float:
    """Positive gap between the continuum value and its lattice counterpart at one J0."""
    lat = make_lattice(params, J0)
    if quantity is Quantity.ENERGY:
        return continuum_energy(n, params) - q_energy(n, lat)
    if quantity is Quantity.PHASE:
        omega = continuum_energy(n, params) / params.hbar
        return phase_drifts(omega, J0 * lat.tau0, [lat.tau0])[0]
    cont = continuum_uncertainties(n, params)
    latt = lattice_uncertainties(n, lat)
    if quantity is Quantity.DELTA_P:
        return cont.delta_p - latt.delta_p
    if quantity is Quantity.DELTA_X2:
        return cont.delta_x**2 - latt.delta_x**2
    if quantity is Quantity.PRODUCT:
        return 1.0 - latt.product / cont.product
    raise DomainError(f"unknown quantity {quantity!r}")


def sweep(n: int, J0_list, quantity: Quantity | str, params: PhysicalParams | None = None,
          workers: int | None = None) -> ConvergenceSeries:
    """Evaluate the deviation for every J0 (concurrently) and fit its power law."""
    params = params or PhysicalParams()
    quantity = Quantity(quantity)
    J0s = sorted({int(J) for J in J0_list})
    if len(J0s) < 3:
        raise DomainError(f"sweep needs at least 3 distinct J0 values, got {J0s}")
    if n < 1 or n >= J0s[0]:
        raise DomainError(f"need 1 <= n < min(J0) = {J0s[0]}, got n={n}")

    with ThreadPoolExecutor(max_workers=workers) as pool:
        values = list(pool.map(lambda J0: deviation(quantity, n, J0, params), J0s))
    points = tuple((params.L / J0, v) for J0, v in zip(J0s, values))

    fit = fit_power_law(points)
    refit = fit_power_law(points[1:]) if fit.r_squared < R2_REFIT_THRESHOLD and len(points) > 3 else None
    best = refit or fit
    return ConvergenceSeries(
        quantity=quantity,
        n=n,
        J0s=tuple(J0s),
        points=points,
        fit=fit,
        refit=refit,
        extrapolated_coefficient=richardson_coefficient(points, round(best.exponent)),
    )


def fit_product_expansion(n: int, J0_list, params: PhysicalParams | None = None) -> tuple[float, float]:
    """Fit ``product/(hbar/2) = alpha + alpha*beta*lambda0^2`` by linear least squares."""
    params = params or PhysicalParams()
    J0s = sorted(int(J) for J in J0_list)
    if len(J0s) < 3:
        raise DomainError("need at least 3 lattices")
    lam2 = np.array([(params.L / J0) ** 2 for J0 in J0s])
    ratio = np.array([lattice_uncertainties(n, make_lattice(params, J0)).product_over_hbar_half for J0 in J0s])
    slope, intercept = np.polyfit(lam2, ratio, 1)
    return float(intercept), float(slope / intercept)
