"""Time sector: the leapfrog recurrence for T(t) and its closed-form phase.

``T(j+1) - T(j-1) + 2 i tau0 omega T(j) = 0`` is solved by ``exp(i j theta)``
with ``sin(theta) = -omega tau0``.  The second root ``-exp(-i theta)`` is the
parasitic leapfrog mode; it is only excited when the second seed value is not
exactly ``exp(i theta)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import DomainError, LatticeSpec
from .spectrum import q_eigenfunction

__all__ = [
    "Seed",
    "EvolutionParams",
    "PhaseSequence",
    "time_phase",
    "evolve_closed",
    "evolve_recurrence",
    "recurrence_residual",
    "phase_drifts",
    "phase_drift_order",
    "spacetime_wavefunction",
]


class Seed(enum.Enum):
    CLOSED_FORM = "closed"
    EULER = "euler"


@dataclass(frozen=True)
class EvolutionParams:
    omega: float
    tau0: float
    steps: int

    def __post_init__(self):
        if self.tau0 <= 0:
            raise DomainError(f"tau0 must be positive, got {self.tau0!r}")
        if int(self.steps) != self.steps or self.steps < 0:
            raise DomainError(f"steps must be a non-negative integer, got {self.steps!r}")
        time_phase(self.omega, self.tau0)


@dataclass(frozen=True, eq=False)
class PhaseSequence:
    values: np.ndarray
    theta: float
    tau0: float

    def csv_table(self):
        header = ["j_t", "t", "re_T", "im_T", "modulus", "phase"]
        rows = [
            [j, j * self.tau0, z.real, z.imag, abs(z), math.atan2(z.imag, z.real)]
            for j, z in enumerate(self.values)
        ]
        return header, rows

    def to_dict(self) -> dict:
        return {
            "theta": self.theta,
            "tau0": self.tau0,
            "values": [[float(z.real), float(z.imag)] for z in self.values],
        }


def time_phase(omega: float, tau0: float) -> float:
    """Phase per step, ``-arcsin(omega tau0)`` in (-pi/2, 0]."""
    if omega < 0:
        raise DomainError(f"omega must be non-negative, got {omega!r}")
    wt = omega * tau0
    if not wt < 1.0:
        raise DomainError(f"omega*tau0 = {wt!r} outside the stability domain (must be < 1)")
    return -math.asin(wt)


def evolve_closed(p: EvolutionParams) -> PhaseSequence:
    """``exp(i j theta)`` for j = 0..steps, seeded with T(0) = 1."""
    theta = time_phase(p.omega, p.tau0)
    # extended-precision phase: j*theta in float64 loses ~j ulps by j = 1e4
    phase = np.arange(p.steps + 1, dtype=np.longdouble) * np.longdouble(theta)
    values = np.cos(phase).astype(float) + 1j * np.sin(phase).astype(float)
    return PhaseSequence(values=values, theta=theta, tau0=p.tau0)


def evolve_recurrence(p: EvolutionParams, seed: Seed = Seed.CLOSED_FORM) -> PhaseSequence:
    """Step the two-term recurrence explicitly from T(0) = 1 and a seeded T(tau0)."""
    theta = time_phase(p.omega, p.tau0)
    if p.steps < 2:
        raise DomainError(f"recurrence needs at least 2 steps, got {p.steps}")
    T = np.empty(p.steps + 1, dtype=complex)
    T[0] = 1.0
    if seed is Seed.CLOSED_FORM:
        T[1] = complex(math.cos(theta), math.sin(theta))
    else:
        euler = complex(1.0, -p.omega * p.tau0)
        T[1] = euler / abs(euler)
    coupling = 2j * p.tau0 * p.omega
    for j in range(1, p.steps):
        T[j + 1] = T[j - 1] - coupling * T[j]
    return PhaseSequence(values=T, theta=theta, tau0=p.tau0)


def recurrence_residual(seq: PhaseSequence, omega: float) -> np.ndarray:
    """``|T(j+1) - T(j-1) + 2 i tau0 omega T(j)|`` for j = 1..steps-1."""
    T = seq.values
    return np.abs(T[2:] - T[:-2] + 2j * seq.tau0 * omega * T[1:-1])


def _steps_for(total_time: float, tau0: float) -> int:
    steps = round(total_time / tau0)
    if steps < 1 or not math.isclose(steps * tau0, total_time, rel_tol=1e-9):
        raise DomainError(f"tau0={tau0!r} does not divide total_time={total_time!r}")
    return steps


def phase_drifts(omega: float, total_time: float, tau0_list) -> list[float]:
    """Accumulated phase error against ``exp(-i omega t)`` at ``total_time``, per tau0."""
    tau0_list = list(tau0_list)
    if not tau0_list:
        raise DomainError("tau0_list is empty")
    drifts = []
    for tau0 in tau0_list:
        steps = _steps_for(total_time, tau0)
        seq = evolve_closed(EvolutionParams(omega, tau0, steps))
        accumulated = np.unwrap(np.angle(seq.values))[-1]
        drifts.append(float(abs(accumulated + omega * total_time)))
    return drifts


def phase_drift_order(omega: float, total_time: float, tau0_list) -> float:
    """Fitted power of tau0 in the global phase drift (2 for leapfrog)."""
    from .analysis import fit_power_law

    tau0_list = list(tau0_list)
    drifts = phase_drifts(omega, total_time, tau0_list)
    exponent, _, _ = fit_power_law(list(zip(tau0_list, drifts)))
    return exponent


def spacetime_wavefunction(n: int, lat: LatticeSpec, steps: int) -> np.ndarray:
    """psi[j_t, j] = T(j_t tau0) u_n(j lambda0), with omega = E_n^q / hbar."""
    mode = q_eigenfunction(n, lat)
    omega = mode.energy_q / lat.params.hbar
    T = evolve_closed(EvolutionParams(omega, lat.tau0, steps)).values
    return np.outer(T, mode.eigenfunction)
