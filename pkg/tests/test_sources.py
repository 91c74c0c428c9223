import math

import pytest

from fockfringe.fock import apply_creation, normalize, pattern_probability, vacuum
from fockfringe.network import BeamSplitter, apply_beam_splitter
from fockfringe.sources import (
    SqueezedVacuumSpec,
    kitten_input,
    noon,
    pair_detection_probability,
    pair_fock,
    squeezed_vacuum,
    unnormalized_pair_rate,
)


def test_squeezed_vacuum_basics():
    assert dict(squeezed_vacuum(SqueezedVacuumSpec(0.0, 5)).terms) == {(0, 0): 1}
    state = squeezed_vacuum(SqueezedVacuumSpec(0.1, 4))
    assert state.norm_squared() == pytest.approx(1, abs=1e-12)
    assert all(k[0] == k[1] for k in state.terms)


@pytest.mark.parametrize("alpha", [0.1, 0.35 - 0.2j, -0.6])
def test_squeezed_vacuum_amplitudes_are_geometric(alpha):
    state = squeezed_vacuum(SqueezedVacuumSpec(alpha, 8))
    for n in range(1, 9):
        ratio = state.amplitude((n, n)) / state.amplitude((n - 1, n - 1))
        assert ratio == pytest.approx(alpha, abs=1e-12)


def test_squeezed_vacuum_rejects_large_alpha():
    with pytest.raises(ValueError):
        SqueezedVacuumSpec(1.0)
    with pytest.raises(ValueError):
        SqueezedVacuumSpec(0.5, -1)
    with pytest.raises(ValueError):
        pair_detection_probability(1.2, 1)


def test_pair_detection_probability():
    assert pair_detection_probability(0, 0) == 1
    assert pair_detection_probability(0.1, 1) == pytest.approx(0.0099, abs=1e-15)
    assert sum(pair_detection_probability(0.5, n) for n in range(200)) == pytest.approx(1, abs=1e-14)
    # rate under the 1/sqrt(1-|alpha|^2) prefactor, for comparison
    assert unnormalized_pair_rate(0.1, 1) == pytest.approx(0.01 / 0.99)
    assert unnormalized_pair_rate(0.1, 2) == pytest.approx(1e-4 / 0.99)


@pytest.mark.parametrize("alpha", [0.05, 0.3, 0.5j])
def test_pair_detection_matches_truncated_state(alpha):
    state = squeezed_vacuum(SqueezedVacuumSpec(alpha, 30))
    for n in range(6):
        assert pattern_probability(state, (n, n)) == pytest.approx(
            pair_detection_probability(alpha, n), abs=1e-10
        )


def test_pair_fock():
    assert dict(pair_fock(0).terms) == {(0, 0): 1}
    assert dict(pair_fock(1).terms) == {(1, 1): 1}
    out = apply_beam_splitter(pair_fock(2), BeamSplitter())
    assert out.amplitude((2, 2)) == pytest.approx(0.5)
    assert abs(out.amplitude((4, 0))) ** 2 == pytest.approx(3 / 8)


def test_noon():
    r = 1 / math.sqrt(2)
    assert dict(noon(1).terms) == pytest.approx({(0, 1): r, (1, 0): r})
    assert dict(noon(2).terms) == pytest.approx({(0, 2): r, (2, 0): r})
    for n in (1, 3, 4, 6):
        state = noon(n)
        assert pattern_probability(state, (n, 0)) == pytest.approx(0.5)
        assert pattern_probability(state, (0, n)) == pytest.approx(0.5)
        assert len(state) == 2
    with pytest.raises(ValueError):
        noon(0)


def kitten_by_operators(n):
    """Same state built with repeated creation operators on vacuum, no binomials."""
    def power(signs):
        # expand prod over 2n factors of (a + s b), distributing one factor at a time
        state = vacuum(2)
        for s in signs:
            state = apply_creation(state, 0) + s * apply_creation(state, 1)
        return state

    total = power([-1] * (2 * n)) + power([1] * (2 * n))
    return normalize(total)[0]


def test_kitten_n1_by_hand():
    # (a-b)^2 + (a+b)^2 = 2a^2 + 2b^2 -> (|2,0> + |0,2>)/sqrt(2)
    r = 1 / math.sqrt(2)
    assert dict(kitten_input(1).terms) == pytest.approx({(2, 0): r, (0, 2): r})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_kitten_matches_operator_expansion(n):
    built = kitten_input(n)
    ref = kitten_by_operators(n)
    assert built.norm_squared() == pytest.approx(1, abs=1e-12)
    for ket in set(built.terms) | set(ref.terms):
        assert abs(built.amplitude(ket) - ref.amplitude(ket)) < 1e-12


@pytest.mark.parametrize("n", [1, 2, 3])
def test_kitten_becomes_noon_at_the_splitter(n):
    inside = apply_beam_splitter(kitten_input(n), BeamSplitter())
    assert set(inside.terms) == {(2 * n, 0), (0, 2 * n)}
    assert pattern_probability(inside, (2 * n, 0)) == pytest.approx(0.5, abs=1e-12)
    assert pattern_probability(inside, (0, 2 * n)) == pytest.approx(0.5, abs=1e-12)
    # relative sign between the branches is (-1)^n
    ratio = inside.amplitude((0, 2 * n)) / inside.amplitude((2 * n, 0))
    assert ratio == pytest.approx((-1) ** n, abs=1e-12)


def test_kitten_rejects_zero():
    with pytest.raises(ValueError):
        kitten_input(0)
