import math

import numpy as np
import pytest

from qbox.continuum import (
    continuum_eigenfunction,
    continuum_energy,
    continuum_mode,
    continuum_moments,
    continuum_uncertainties,
)
from qbox.core import DomainError, PhysicalParams

# high-precision evaluation of the closed forms (30 digits, rounded)
DX_N1 = 0.18075602759566400587
PRODUCT_N1 = 0.56786180838661197839
ALPHA_N1 = 1.1357236167732239568


def gauss_legendre(fn, a, b, order=200):
    x, w = np.polynomial.legendre.leggauss(order)
    t = 0.5 * (b - a) * x + 0.5 * (b + a)
    return 0.5 * (b - a) * np.sum(w * fn(t))


def test_ground_state_energy():
    assert continuum_energy(1) == pytest.approx(4.934802200544679, rel=1e-15)


@pytest.mark.parametrize("n", [2, 3])
def test_energy_scales_as_n_squared(n):
    assert continuum_energy(n) == pytest.approx(n * n * continuum_energy(1), rel=1e-15)


def test_energy_with_units():
    p = PhysicalParams(hbar=2.0, mass=3.0, L=0.5)
    assert continuum_energy(1, p) == pytest.approx(4 * math.pi**2 / (6 * 0.25))


def test_mode_fields():
    m = continuum_mode(2, PhysicalParams(L=2.0))
    assert m.k == pytest.approx(math.pi)
    assert m.norm_A == pytest.approx(1.0)


@pytest.mark.parametrize("n", [0, -1])
def test_bad_quantum_number(n):
    with pytest.raises(DomainError):
        continuum_energy(n)
    with pytest.raises(DomainError):
        continuum_uncertainties(n)


def test_eigenfunction_values():
    assert continuum_eigenfunction(1, 0.5) == pytest.approx(math.sqrt(2))
    assert continuum_eigenfunction(2, 0.5) == pytest.approx(0.0, abs=1e-15)
    assert continuum_eigenfunction(1, 0.0) == 0.0
    assert continuum_eigenfunction(3, 1.0) == 0.0
    with pytest.raises(DomainError):
        continuum_eigenfunction(1, 1.5)


def test_ground_state_uncertainties():
    r = continuum_uncertainties(1)
    assert r.delta_x == pytest.approx(DX_N1, rel=1e-14)
    assert r.delta_p == pytest.approx(math.pi, rel=1e-15)
    assert r.product == pytest.approx(PRODUCT_N1, rel=1e-14)
    assert r.product_over_hbar_half == pytest.approx(ALPHA_N1, rel=1e-14)
    assert r.delta_x * r.delta_p == pytest.approx(r.product, rel=1e-14)


@pytest.mark.parametrize("n", [1, 2, 5])
@pytest.mark.parametrize("L", [1.0, 2.5])
def test_moments_match_quadrature(n, L):
    p = PhysicalParams(L=L)
    density = lambda x: (2 / L) * np.sin(n * np.pi * x / L) ** 2
    x_mean = gauss_legendre(lambda x: x * density(x), 0, L)
    x2_mean = gauss_legendre(lambda x: x * x * density(x), 0, L)
    cm, c2 = continuum_moments(n, p)
    assert cm == pytest.approx(x_mean, abs=1e-10 * L)
    assert c2 == pytest.approx(x2_mean, abs=1e-10 * L**2)
    dx = continuum_uncertainties(n, p).delta_x
    assert dx == pytest.approx(math.sqrt(x2_mean - x_mean**2), rel=1e-10)


def test_heisenberg_holds_and_grows():
    ratios = [continuum_uncertainties(n).product_over_hbar_half for n in range(1, 51)]
    assert min(ratios) >= 1.0
    assert all(b > a for a, b in zip(ratios, ratios[1:]))
    # large-n behaviour ~ n pi / sqrt(3)
    assert ratios[-1] / (50 * math.pi / math.sqrt(3)) == pytest.approx(1.0, rel=1e-3)
