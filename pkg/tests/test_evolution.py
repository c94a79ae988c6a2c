import math

import numpy as np
import pytest

from qbox.core import DomainError, PhysicalParams, make_lattice
from qbox.evolution import (
    EvolutionParams,
    Seed,
    evolve_closed,
    evolve_recurrence,
    phase_drift_order,
    phase_drifts,
    recurrence_residual,
    spacetime_wavefunction,
    time_phase,
)
from qbox.spectrum import q_eigenfunction


def test_time_phase_values():
    assert time_phase(1.0, 0.1) == pytest.approx(-0.10016742116155980, rel=1e-15)
    assert time_phase(0.0, 0.3) == 0.0
    with pytest.raises(DomainError):
        time_phase(1.0, 1.0)
    with pytest.raises(DomainError):
        time_phase(-1.0, 0.1)


@pytest.mark.parametrize("wt", [0.0, 0.1, 0.5, 0.99])
def test_phase_solves_characteristic_equation(wt):
    theta = time_phase(wt, 1.0)
    assert math.sin(theta) == pytest.approx(-wt, abs=1e-16)
    root = complex(math.cos(theta), math.sin(theta))
    assert abs(root - 1 / root + 2j * wt) < 1e-15


def test_closed_sequence():
    seq = evolve_closed(EvolutionParams(1.0, 0.1, 10))
    assert seq.values[10] == pytest.approx(np.exp(10j * seq.theta), abs=1e-15)
    assert np.max(np.abs(np.abs(seq.values) - 1)) < 1e-15
    assert evolve_closed(EvolutionParams(1.0, 0.1, 0)).values.tolist() == [1]


def test_closed_sequence_continuum_limit():
    errs = []
    for steps in (10, 100, 1000):
        seq = evolve_closed(EvolutionParams(1.0, 1.0 / steps, steps))
        errs.append(abs(seq.values[-1] - np.exp(-1j)))
    assert errs[2] < errs[1] < errs[0]
    assert errs[2] < 1e-6


def test_recurrence_with_closed_seed():
    p = EvolutionParams(1.0, 0.1, 100)
    rec = evolve_recurrence(p, Seed.CLOSED_FORM)
    assert np.max(np.abs(rec.values - evolve_closed(p).values)) < 1e-12


def test_closed_form_residual():
    p = EvolutionParams(2.0, 0.05, 5000)
    seq = evolve_closed(p)
    assert recurrence_residual(seq, p.omega).max() < 1e-13


def test_euler_seed_excites_parasitic_mode():
    p = EvolutionParams(1.0, 0.1, 400)
    dev = np.abs(evolve_recurrence(p, Seed.EULER).values - evolve_closed(p).values)
    # bounded oscillation: does not grow, does not vanish
    assert 1e-5 < dev.max() < 1e-2
    assert dev[200:].max() < 2 * dev[:200].max()


def test_recurrence_needs_two_steps():
    with pytest.raises(DomainError):
        evolve_recurrence(EvolutionParams(1.0, 0.1, 1))


def test_params_validation():
    with pytest.raises(DomainError):
        EvolutionParams(1.0, 0.0, 5)
    with pytest.raises(DomainError):
        EvolutionParams(1.0, 0.1, -1)
    with pytest.raises(DomainError):
        EvolutionParams(20.0, 0.1, 5)


def test_drift_second_order():
    taus = [0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001]
    assert phase_drift_order(1.0, 1.0, taus) == pytest.approx(2.0, abs=0.05)
    d = phase_drifts(1.0, 1.0, [0.02, 0.01])
    assert d[0] / d[1] == pytest.approx(4.0, rel=0.01)


def test_drift_vanishes_without_frequency():
    assert phase_drifts(0.0, 1.0, [0.1, 0.01]) == [0.0, 0.0]
    with pytest.raises(DomainError):
        phase_drift_order(0.0, 1.0, [0.1, 0.05, 0.01])


def test_drift_input_checks():
    with pytest.raises(DomainError):
        phase_drifts(1.0, 1.0, [])
    with pytest.raises(DomainError):
        phase_drifts(1.0, 1.0, [0.3])


def test_spacetime_composition():
    lat = make_lattice(PhysicalParams(), 16)
    psi = spacetime_wavefunction(1, lat, 5)
    u = q_eigenfunction(1, lat).eigenfunction
    assert psi.shape == (6, 17)
    np.testing.assert_allclose(np.abs(psi), np.abs(u)[None, :].repeat(6, 0), atol=1e-15)


def test_csv_schema():
    header, rows = evolve_closed(EvolutionParams(1.0, 0.1, 3)).csv_table()
    assert header == ["j_t", "t", "re_T", "im_T", "modulus", "phase"]
    assert rows[0] == [0, 0.0, 1.0, 0.0, 1.0, 0.0]
