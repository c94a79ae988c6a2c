"""Closed-form eigenpairs of the stride-2 central-difference Hamiltonian.

The lattice admits modes ``n = 1 .. J0-1`` only: ``n = J0`` is the null
vector and larger ``n`` alias back onto this range.  Modes ``n`` and
``J0 - n`` are exactly degenerate because the stencil couples only sites of
equal parity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .continuum import continuum_energy
from .core import DomainError, LatticeSpec, inner_product

__all__ = [
    "Mode",
    "DerivationTrace",
    "check_mode_index",
    "spatial_phase",
    "q_wavenumber_squared",
    "q_energy",
    "q_energy_expansion",
    "derivation_trace",
    "eigenvalue_equation_residual",
    "q_eigenfunction",
    "gram_matrix",
]


def check_mode_index(n: int, lat: LatticeSpec) -> int:
    if int(n) != n or not 1 <= n <= lat.J0 - 1:
        raise DomainError(f"mode n={n!r} outside 1..{lat.J0 - 1} for J0={lat.J0}")
    return int(n)


@dataclass(frozen=True, eq=False)
class Mode:
    n: int
    theta: float
    k_squared: float
    energy_q: float
    energy_continuum: float
    eigenfunction: np.ndarray
    lambda0: float = float("nan")

    def csv_table(self):
        rows = [[j, j * self.lambda0, float(u)] for j, u in enumerate(self.eigenfunction)]
        return ["j", "x", "u"], rows

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "theta": self.theta,
            "k_squared": self.k_squared,
            "energy_q": self.energy_q,
            "energy_continuum": self.energy_continuum,
            "eigenfunction": [float(u) for u in self.eigenfunction],
        }


@dataclass(frozen=True)
class DerivationTrace:
    """Substitution variables ``y = k^2 lambda0^2`` and ``t = tan(2 n pi / J0)``.

    ``y`` is obtained from ``t`` by the positive-root inversion, which is only
    the right branch while ``cos(2 n pi / J0) > 0``.
    """

    y: float
    t: float
    valid: bool


def spatial_phase(n: int, lat: LatticeSpec) -> float:
    """theta = 2 n pi / J0, so that exp(i J0 theta) = 1."""
    check_mode_index(n, lat)
    return 2.0 * math.pi * n / lat.J0


def _half_phase_sin(n: int, J0: int) -> float:
    # sin(n pi / J0) through the reflected index so n and J0-n agree bitwise
    m = min(n, J0 - n)
    return math.sin(math.pi * m / J0)


def q_wavenumber_squared(n: int, lat: LatticeSpec) -> float:
    """k^2 = (1 - cos(2 n pi lambda0 / L)) / (2 lambda0^2) = sin^2(n pi / J0) / lambda0^2."""
    n = check_mode_index(n, lat)
    return _half_phase_sin(n, lat.J0) ** 2 / lat.lambda0**2


def q_energy(n: int, lat: LatticeSpec) -> float:
    p = lat.params
    return p.hbar**2 * q_wavenumber_squared(n, lat) / (2.0 * p.mass)


def q_energy_expansion(n: int, lat: LatticeSpec) -> tuple[float, float]:
    """Leading term and lambda0^2 coefficient of the small-lambda0 energy series."""
    check_mode_index(n, lat)
    p = lat.params
    leading = (math.pi * p.hbar * n / p.L) ** 2 / (2.0 * p.mass)
    coeff = -(math.pi**4) * p.hbar**2 * n**4 / (6.0 * p.mass * p.L**4)
    return leading, coeff


def derivation_trace(n: int, lat: LatticeSpec) -> DerivationTrace:
    check_mode_index(n, lat)
    phi = 2.0 * math.pi * n / lat.J0
    t = math.tan(phi)
    s = 1.0 + t * t
    y = (s - math.sqrt(s)) / (2.0 * s)
    return DerivationTrace(y=y, t=t, valid=math.cos(phi) > 0)


def eigenvalue_equation_residual(k: float, n: int, lat: LatticeSpec) -> float:
    """Cross-multiplied eigenvalue condition; zero iff ``k`` is the n-th root.

    ``sin(phi) (1 - 2 k^2 l^2) - cos(phi) 2 k l sqrt(1 - k^2 l^2)`` with
    ``phi = 2 n pi / J0``.  Unlike the tangent form it has no pole at
    ``k^2 l^2 = 1/2``.  The square root carries the sign of ``cos(n pi / J0)``,
    the real part of the ansatz root, so modes above ``J0/2`` sit on the
    negative branch.
    """
    check_mode_index(n, lat)
    kl = k * lat.lambda0
    y = kl * kl
    if y > 1.0:
        raise DomainError(f"k^2 lambda0^2 = {y} lies outside the lattice band [0, 1]")
    phi = 2.0 * math.pi * n / lat.J0
    branch = -1.0 if 2 * n > lat.J0 else 1.0
    return math.sin(phi) * (1.0 - 2.0 * y) - math.cos(phi) * 2.0 * kl * branch * math.sqrt(1.0 - y)


def _mode_samples(n: int, lat: LatticeSpec) -> np.ndarray:
    # reduce n*j modulo the period 2*J0 exactly, in integers
    phase = (n * np.arange(lat.J0 + 1)) % (2 * lat.J0)
    u = math.sqrt(2.0 / lat.params.L) * np.sin(np.pi * (phase / lat.J0))
    u[0] = 0.0
    u[-1] = 0.0
    return u


def q_eigenfunction(n: int, lat: LatticeSpec) -> Mode:
    n = check_mode_index(n, lat)
    return Mode(
        n=n,
        theta=spatial_phase(n, lat),
        k_squared=q_wavenumber_squared(n, lat),
        energy_q=q_energy(n, lat),
        energy_continuum=continuum_energy(n, lat.params),
        eigenfunction=_mode_samples(n, lat),
        lambda0=lat.lambda0,
    )


def gram_matrix(lat: LatticeSpec) -> np.ndarray:
    """Matrix of lambda0-weighted overlaps between all lattice modes."""
    modes = [_mode_samples(n, lat) for n in range(1, lat.J0)]
    size = len(modes)
    G = np.empty((size, size))
    for a in range(size):
        for b in range(a, size):
            G[a, b] = G[b, a] = inner_product(modes[a], modes[b], lat).real
    return G
