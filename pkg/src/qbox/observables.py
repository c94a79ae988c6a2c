"""Expectation values and uncertainties of lattice eigenmodes.

Every quantity is computed twice: once from its closed form and once by
lambda0-weighted summation over the sampled eigenfunction.  Momentum is the
stride-1 central difference; applying it twice gives exactly the stride-2
second difference of the Hamiltonian, which is why ``<p^2>`` obtained through
the operator matches ``2 m E``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .continuum import continuum_uncertainties
from .core import DomainError, LatticeSpec, PhysicalParams, _as_wave, inner_product
from .oracle import GhostPolicy, ghost_value
from .spectrum import check_mode_index, q_eigenfunction, q_energy

__all__ = [
    "ExpectationSet",
    "UncertaintyReport",
    "ScanReport",
    "UNCERTAINTY_COLUMNS",
    "momentum_apply",
    "x2_closed_form",
    "expectations",
    "lattice_uncertainties",
    "product_expansion_coefficients",
    "heisenberg_scan",
]

UNCERTAINTY_COLUMNS = ["n", "delta_x", "delta_p", "product", "product_over_hbar_half", "continuum_product"]

# products this close to hbar/2 (relative) count as saturating, not violating
_FLAG_RTOL = 1e-12


@dataclass(frozen=True)
class ExpectationSet:
    n: int
    p_mean: complex
    p2_via_energy: float
    p2_via_operator: float
    x_mean: float
    x2_mean: float


@dataclass(frozen=True)
class UncertaintyReport:
    n: int
    delta_x: float
    delta_p: float
    product: float
    product_over_hbar_half: float
    alpha: float
    beta: float
    continuum_product: float

    def to_dict(self) -> dict:
        return asdict(self)

    def csv_table(self):
        return UNCERTAINTY_COLUMNS, [[getattr(self, c) for c in UNCERTAINTY_COLUMNS]]


@dataclass(frozen=True)
class ScanReport:
    J0: int
    rows: tuple[UncertaintyReport, ...]
    min_product: float
    min_n: tuple[int, ...]
    sub_heisenberg: tuple[int, ...]

    @property
    def flagged(self) -> bool:
        return bool(self.sub_heisenberg)

    def to_dict(self) -> dict:
        return {
            "J0": self.J0,
            "min_product": self.min_product,
            "min_n": list(self.min_n),
            "sub_heisenberg": list(self.sub_heisenberg),
            "flagged": self.flagged,
            "rows": [r.to_dict() for r in self.rows],
        }

    def csv_table(self):
        return UNCERTAINTY_COLUMNS, [[getattr(r, c) for c in UNCERTAINTY_COLUMNS] for r in self.rows]


def momentum_apply(f, lat: LatticeSpec, policy: GhostPolicy = GhostPolicy.ODD_EXTENSION) -> np.ndarray:
    """``-i hbar (f[j+1] - f[j-1]) / (2 lambda0)`` at every site j = 0..J0."""
    f = np.asarray(_as_wave(f, lat), dtype=complex)
    J0 = lat.J0
    padded = np.empty(J0 + 3, dtype=complex)
    padded[1:-1] = f
    padded[0] = ghost_value(f, -1, policy)
    padded[-1] = ghost_value(f, J0 + 1, policy)
    return -1j * lat.params.hbar * (padded[2:] - padded[:-2]) / (2.0 * lat.lambda0)


def x2_closed_form(n: int, lat: LatticeSpec) -> float:
    """``L^2/3 + lambda0^2/6 - (lambda0^2/2) csc^2(n pi / J0)``."""
    check_mode_index(n, lat)
    L, lam = lat.params.L, lat.lambda0
    s = math.sin(math.pi * min(n, lat.J0 - n) / lat.J0)
    return L**2 / 3.0 + lam**2 / 6.0 - lam**2 / (2.0 * s * s)


def expectations(n: int, lat: LatticeSpec, policy: GhostPolicy = GhostPolicy.ODD_EXTENSION) -> ExpectationSet:
    n = check_mode_index(n, lat)
    u = q_eigenfunction(n, lat).eigenfunction
    x = lat.sites()
    pu = momentum_apply(u, lat, policy)
    p2u = momentum_apply(pu, lat, policy)
    return ExpectationSet(
        n=n,
        p_mean=inner_product(u, pu, lat),
        p2_via_energy=2.0 * lat.params.mass * q_energy(n, lat),
        p2_via_operator=inner_product(u, p2u, lat).real,
        x_mean=inner_product(u, x * u, lat).real,
        x2_mean=inner_product(u, x * x * u, lat).real,
    )


def product_expansion_coefficients(n: int, params: PhysicalParams | None = None) -> tuple[float, float]:
    """``alpha, beta`` in ``dx dp = alpha (1 + beta lambda0^2) hbar/2 + O(lambda0^4)``."""
    params = params or PhysicalParams()
    if int(n) != n or n < 1:
        raise DomainError(f"quantum number must be an integer >= 1, got {n!r}")
    npi2 = (n * math.pi) ** 2
    return math.sqrt((npi2 - 6.0) / 3.0), -npi2 / (6.0 * params.L**2)


def lattice_uncertainties(n: int, lat: LatticeSpec) -> UncertaintyReport:
    """Closed-form lattice uncertainties, cross-checked against direct sums."""
    n = check_mode_index(n, lat)
    p = lat.params
    L, lam, hbar = p.L, lat.lambda0, p.hbar
    s = math.sin(math.pi * min(n, lat.J0 - n) / lat.J0)

    delta_p = hbar * s / lam
    dx2 = L**2 + 2.0 * lam**2 - 6.0 * lam**2 / (s * s)
    if dx2 < 0:
        raise AssertionError(f"negative Delta x^2 ({dx2}) for n={n}, J0={lat.J0}")
    delta_x = math.sqrt(dx2) / (2.0 * math.sqrt(3.0))
    product = delta_x * delta_p

    ex = expectations(n, lat)
    # J0 = 2 has a single interior site, so Delta x vanishes up to rounding
    summed = math.sqrt(max(ex.x2_mean - ex.x_mean**2, 0.0)) * math.sqrt(ex.p2_via_operator - abs(ex.p_mean) ** 2)
    if not math.isclose(summed, product, rel_tol=1e-10, abs_tol=1e-14 * hbar):
        raise AssertionError(f"closed-form product {product!r} disagrees with direct sum {summed!r}")

    alpha, beta = product_expansion_coefficients(n, p)
    return UncertaintyReport(
        n=n,
        delta_x=delta_x,
        delta_p=delta_p,
        product=product,
        product_over_hbar_half=product / (hbar / 2.0),
        alpha=alpha,
        beta=beta,
        continuum_product=continuum_uncertainties(n, p).product,
    )


def heisenberg_scan(lat: LatticeSpec) -> ScanReport:
    """Uncertainty table for every lattice mode, flagging products below hbar/2."""
    rows = tuple(lattice_uncertainties(n, lat) for n in range(1, lat.J0))
    ratios = np.array([r.product_over_hbar_half for r in rows])
    low = ratios.min()
    min_n = tuple(r.n for r in rows if r.product_over_hbar_half <= low * (1 + _FLAG_RTOL))
    sub = tuple(r.n for r in rows if r.product_over_hbar_half < 1.0 - _FLAG_RTOL)
    return ScanReport(
        J0=lat.J0,
        rows=rows,
        min_product=float(low * lat.params.hbar / 2.0),
        min_n=min_n,
        sub_heisenberg=sub,
    )
