import math

import numpy as np
import pytest

from qbox.analysis import (
    Quantity,
    fit_power_law,
    fit_product_expansion,
    richardson_coefficient,
    sweep,
)
from qbox.core import DomainError, PhysicalParams

H = [2.0**-k for k in range(3, 10)]


def test_exact_power_laws():
    fit = fit_power_law([(h, 3 * h**2) for h in H])
    assert fit.exponent == pytest.approx(2.0, abs=1e-12)
    assert fit.coefficient == pytest.approx(3.0, rel=1e-12)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
    e, c, r2 = fit_power_law([(h, 5 * h**4) for h in H])
    assert (e, c) == pytest.approx((4.0, 5.0), rel=1e-12)


def test_contaminated_power_law():
    fit = fit_power_law([(h, 3 * h**2 * (1 + h**2)) for h in H])
    assert fit.exponent == pytest.approx(2.0, abs=0.05)


def test_fit_rejects_bad_input():
    with pytest.raises(DomainError):
        fit_power_law([(0.1, 1.0), (0.05, 0.5)])
    with pytest.raises(DomainError, match="non-positive"):
        fit_power_law([(0.1, 1.0), (0.05, -0.5), (0.01, 0.1)])
    with pytest.raises(DomainError):
        fit_power_law([(0.1, 1.0), (0.05, 0.0), (0.01, 0.1)])


def test_richardson_removes_tail():
    pts = [(h, 3 * h**2 * (1 + 7 * h**2)) for h in H]
    assert richardson_coefficient(pts, 2) == pytest.approx(3.0, rel=1e-8)
    with pytest.raises(DomainError):
        richardson_coefficient([(0.1, 1.0), (0.05, 0.3), (0.01, 0.01)], 2)


J_FULL = [2**k for k in range(4, 13)]


def test_energy_sweep():
    s = sweep(1, J_FULL, Quantity.ENERGY)
    assert s.fitted_exponent == pytest.approx(2.0, abs=0.02)
    assert s.extrapolated_coefficient == pytest.approx(math.pi**4 / 6, rel=0.01)
    assert s.J0s == tuple(J_FULL)
    lam = [p[0] for p in s.points]
    assert lam == sorted(lam, reverse=True)
    assert all(v > 0 for _, v in s.points)


def test_dx2_sweep():
    s = sweep(1, [2**k for k in range(4, 9)], "dx2")
    assert s.fitted_exponent == pytest.approx(4.0, abs=0.05)
    assert s.fitted_coefficient == pytest.approx(math.pi**2 / 30, rel=0.02)


def test_product_sweep():
    s = sweep(1, [2**k for k in range(6, 13)], "product")
    assert s.fitted_exponent == pytest.approx(2.0, abs=0.02)
    assert s.fitted_coefficient == pytest.approx(math.pi**2 / 6, rel=0.01)


def test_dp_and_phase_sweeps():
    s = sweep(2, J_FULL, "dp")
    assert s.fitted_exponent == pytest.approx(2.0, abs=0.02)
    assert s.extrapolated_coefficient == pytest.approx((2 * math.pi) ** 3 / 6, rel=0.01)
    s = sweep(1, [2**k for k in range(3, 11)], "phase")
    assert s.fitted_exponent == pytest.approx(2.0, abs=0.05)


def test_sweep_preconditions():
    with pytest.raises(DomainError):
        sweep(1, [16, 32], "energy")
    with pytest.raises(DomainError):
        sweep(16, [16, 32, 64], "energy")
    with pytest.raises(ValueError):
        sweep(1, [16, 32, 64], "bogus")


def test_sweep_order_independent_of_input_order():
    a = sweep(1, [64, 16, 32, 128], "energy", workers=4)
    b = sweep(1, [16, 32, 64, 128], "energy", workers=1)
    assert a.points == b.points and a.fit == b.fit


def test_refit_triggered_by_poor_fit():
    # coarse lattices are far from asymptotic for high modes
    s = sweep(3, [4, 8, 16, 32], "energy")
    assert s.fit.r_squared < 0.999
    assert s.refit is not None
    assert abs(s.refit.exponent - 2) < abs(s.fit.exponent - 2)


def test_product_expansion_fit():
    alpha, beta = fit_product_expansion(1, [2**k for k in range(6, 13)], PhysicalParams(L=2.0))
    assert alpha == pytest.approx(math.sqrt((math.pi**2 - 6) / 3), rel=1e-3)
    assert beta == pytest.approx(-(math.pi**2) / 24, rel=1e-2)


def test_series_dict():
    d = sweep(1, [16, 32, 64], "energy").to_dict()
    assert d["quantity"] == "energy"
    assert [p["J0"] for p in d["points"]] == [16, 32, 64]
