"""Physical parameters, lattice geometry and the discrete inner product.

Sites are ``x_j = j * lambda0`` for ``j = 0 .. J0`` inclusive; endpoint values
are stored so that sums run over the full closed index range.  A wave vector
is a plain 1-D numpy array of length ``J0 + 1``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "DomainError",
    "PhysicalParams",
    "LatticeSpec",
    "make_lattice",
    "wave_vector",
    "inner_product",
    "wave_to_json",
    "wave_from_json",
    "wave_to_csv",
]


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


@dataclass(frozen=True)
class PhysicalParams:
    """hbar, mass, box length and light speed.  Defaults are natural box units."""

    hbar: float = 1.0
    mass: float = 1.0
    L: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        for name in ("hbar", "mass", "L", "c"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be a positive finite number, got {value!r}")


@dataclass(frozen=True)
class LatticeSpec:
    params: PhysicalParams
    J0: int
    lambda0: float = field(init=False)
    tau0: float = field(init=False)

    def __post_init__(self):
        if isinstance(self.J0, bool) or int(self.J0) != self.J0:
            raise DomainError(f"J0 must be an integer, got {self.J0!r}")
        if self.J0 < 2:
            raise DomainError(f"J0={self.J0}: no interior sites (need J0 >= 2)")
        lam = self.params.L / self.J0
        object.__setattr__(self, "J0", int(self.J0))
        object.__setattr__(self, "lambda0", lam)
        object.__setattr__(self, "tau0", lam / self.params.c)

    @property
    def n_sites(self) -> int:
        return self.J0 + 1

    def sites(self) -> np.ndarray:
        """Positions ``j * lambda0`` for j = 0..J0."""
        return np.arange(self.J0 + 1) * self.lambda0


def make_lattice(params: PhysicalParams | None = None, J0: int = 8) -> LatticeSpec:
    """Build the lattice with ``lambda0 = L / J0`` and ``tau0 = lambda0 / c``."""
    if params is None:
        params = PhysicalParams()
    return LatticeSpec(params, J0)


def _as_wave(f, lat: LatticeSpec, name: str = "f") -> np.ndarray:
    arr = np.asarray(f)
    if arr.ndim != 1 or arr.shape[0] != lat.n_sites:
        raise DomainError(
            f"{name} has shape {arr.shape}, expected ({lat.n_sites},) for J0={lat.J0}"
        )
    return arr


def wave_vector(values, lat: LatticeSpec) -> np.ndarray:
    """Validate ``values`` as a wave vector on ``lat`` (length J0+1, zero endpoints)."""
    arr = _as_wave(values, lat, "values")
    if arr[0] != 0 or arr[-1] != 0:
        raise DomainError("wave vector must vanish at j=0 and j=J0")
    return arr


def inner_product(f, g, lat: LatticeSpec) -> complex:
    """``lambda0 * sum_j conj(f_j) * g_j`` over j = 0..J0."""
    f = _as_wave(f, lat, "f")
    g = _as_wave(g, lat, "g")
    return complex(lat.lambda0 * np.vdot(f, g))


def wave_to_json(f) -> str:
    """JSON array of ``[re, im]`` pairs."""
    arr = np.asarray(f, dtype=complex)
    return json.dumps([[float(z.real), float(z.imag)] for z in arr])


def wave_from_json(text: str) -> np.ndarray:
    pairs = json.loads(text)
    return np.array([complex(re, im) for re, im in pairs])


def wave_to_csv(f, lat: LatticeSpec) -> str:
    """CSV with columns j, x, re, im."""
    arr = np.asarray(_as_wave(f, lat), dtype=complex)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["j", "x", "re", "im"])
    for j, (x, z) in enumerate(zip(lat.sites(), arr)):
        writer.writerow([j, f"{x:.17g}", f"{z.real:.17g}", f"{z.imag:.17g}"])
    return buf.getvalue()
