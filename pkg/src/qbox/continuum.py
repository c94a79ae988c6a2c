"""Exact particle-in-a-box solutions on the continuum interval [0, L]."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DomainError, PhysicalParams

__all__ = [
    "ContinuumMode",
    "continuum_mode",
    "continuum_energy",
    "continuum_eigenfunction",
    "continuum_moments",
    "continuum_uncertainties",
]


def _check_n(n: int) -> None:
    if int(n) != n or n < 1:
        raise DomainError(f"quantum number must be an integer >= 1, got {n!r}")


@dataclass(frozen=True)
class ContinuumMode:
    n: int
    k: float
    energy: float
    norm_A: float


def continuum_mode(n: int, params: PhysicalParams | None = None) -> ContinuumMode:
    params = params or PhysicalParams()
    _check_n(n)
    return ContinuumMode(
        n=n,
        k=n * math.pi / params.L,
        energy=continuum_energy(n, params),
        norm_A=math.sqrt(2.0 / params.L),
    )


def continuum_energy(n: int, params: PhysicalParams | None = None) -> float:
    """``hbar^2 pi^2 n^2 / (2 m L^2)``."""
    params = params or PhysicalParams()
    _check_n(n)
    return (params.hbar * math.pi * n / params.L) ** 2 / (2.0 * params.mass)


def continuum_eigenfunction(n: int, x: float, params: PhysicalParams | None = None) -> float:
    """``sqrt(2/L) sin(n pi x / L)`` for 0 <= x <= L."""
    params = params or PhysicalParams()
    _check_n(n)
    if not 0.0 <= x <= params.L:
        raise DomainError(f"x={x!r} outside the box [0, {params.L}]")
    if x == 0.0 or x == params.L:
        return 0.0
    # fmod is exact; keeps the pi multiplication on a small argument
    return math.sqrt(2.0 / params.L) * math.sin(math.pi * math.fmod(n * (x / params.L), 2.0))


def continuum_moments(n: int, params: PhysicalParams | None = None) -> tuple[float, float]:
    """Closed-form ``(<x>, <x^2>)`` for the n-th stationary state."""
    params = params or PhysicalParams()
    _check_n(n)
    L = params.L
    x_mean = L / 2.0
    x2_mean = L**2 / 3.0 - L**2 / (2.0 * (n * math.pi) ** 2)
    return x_mean, x2_mean


def continuum_uncertainties(n: int, params: PhysicalParams | None = None):
    """Continuum Delta x, Delta p and their product as an ``UncertaintyReport``.

    The lattice correction coefficient ``beta`` is filled as well so that the
    report is directly comparable with the lattice version.
    """
    from .observables import UncertaintyReport, product_expansion_coefficients

    params = params or PhysicalParams()
    _check_n(n)
    L, hbar = params.L, params.hbar
    npi = n * math.pi
    alpha, beta = product_expansion_coefficients(n, params)
    delta_x = math.sqrt((npi**2 - 6.0) / 3.0) * L / (2.0 * npi)
    delta_p = npi * hbar / L
    product = alpha * hbar / 2.0
    return UncertaintyReport(
        n=n,
        delta_x=delta_x,
        delta_p=delta_p,
        product=product,
        product_over_hbar_half=alpha,
        alpha=alpha,
        beta=beta,
        continuum_product=product,
    )
