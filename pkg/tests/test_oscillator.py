import math

import pytest

from anharmonic import InitialState, OscillatorSpec, hamiltonian_energy


def test_zero_state_has_zero_energy():
    assert hamiltonian_energy(OscillatorSpec(3, 0.0), InitialState(0.0, 0.0)) == 0.0


def test_sextic_energy_direct_substitution():
    # 2 + (0.01/6)*64
    energy = hamiltonian_energy(OscillatorSpec(3, 0.01), InitialState(2.0, 0.0))
    assert energy == pytest.approx(2.0 + 0.01 / 6 * 64, rel=1e-15)


def test_octic_energy_direct_substitution():
    energy = hamiltonian_energy(OscillatorSpec(4, 0.01), InitialState(1.0, 1.0))
    assert energy == pytest.approx(1.00125, rel=1e-15)


def test_energy_even_under_state_negation():
    spec = OscillatorSpec(4, 0.03)
    state = InitialState(1.3, -0.7)
    flipped = InitialState(-1.3, 0.7)
    assert hamiltonian_energy(spec, state) == hamiltonian_energy(spec, flipped)


def test_lambda_zero_reduces_to_sho_energy():
    state = InitialState(0.4, -1.1)
    assert hamiltonian_energy(OscillatorSpec(5, 0.0), state) == (0.4**2 + 1.1**2) / 2


def test_amplitude_and_phase():
    state = InitialState(3.0, 4.0)
    assert state.amplitude == 5.0
    assert state.phase == pytest.approx(math.atan2(4.0, 3.0))


@pytest.mark.parametrize("m", [1, 0, -3])
def test_rejects_small_m(m):
    with pytest.raises(ValueError):
        OscillatorSpec(m, 0.01)


def test_rejects_non_integer_m():
    with pytest.raises(ValueError):
        OscillatorSpec(3.0, 0.01)  # type: ignore[arg-type]


def test_rejects_non_finite_inputs():
    with pytest.raises(ValueError):
        OscillatorSpec(3, math.inf)
    with pytest.raises(ValueError):
        InitialState(math.nan, 0.0)


def test_negative_lambda_accepted():
    spec = OscillatorSpec(3, -0.02)
    assert hamiltonian_energy(spec, InitialState(1.0, 0.0)) < 0.5
