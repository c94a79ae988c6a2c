"""Quantum particle in a box on a (1+1)-dimensional space-time lattice."""

from .analysis import ConvergenceSeries, Quantity, fit_power_law, fit_product_expansion, sweep
from .continuum import continuum_eigenfunction, continuum_energy, continuum_uncertainties
from .core import DomainError, LatticeSpec, PhysicalParams, inner_product, make_lattice
from .evolution import EvolutionParams, Seed, evolve_closed, evolve_recurrence, time_phase
from .observables import expectations, heisenberg_scan, lattice_uncertainties, product_expansion_coefficients
from .oracle import GhostPolicy, build_hamiltonian, eigendecompose, verify_spectrum
from .report import render_report
from .spectrum import gram_matrix, q_eigenfunction, q_energy, q_wavenumber_squared

__version__ = "0.1.0"
