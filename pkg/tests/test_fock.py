import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockfringe.fock import (
    BasisKet,
    PureState,
    apply_creation,
    from_terms,
    inner_product,
    normalize,
    pattern_probability,
    postselect_total,
    vacuum,
)
from fockfringe.sources import noon, squeezed_vacuum, SqueezedVacuumSpec

SQRT2 = math.sqrt(2)


def eq5_polynomial():
    """(u^4/8 + u^2 l^2/4 + l^4/8)|0> built from raw creation operators."""
    def raise_(state, mode, times):
        for _ in range(times):
            state = apply_creation(state, mode)
        return state

    vac = vacuum(2)
    return (
        (1 / 8) * raise_(vac, 0, 4)
        + (1 / 4) * raise_(raise_(vac, 0, 2), 1, 2)
        + (1 / 8) * raise_(vac, 1, 4)
    )


def test_basis_ket_rejects_negative():
    with pytest.raises(ValueError):
        BasisKet((1, -1))
    assert BasisKet((3, 1)).total() == 4


def test_from_terms_vacuum_and_noon():
    vac = from_terms(2, [((0, 0), 1)])
    assert dict(vac.terms) == {(0, 0): 1}
    n4 = from_terms(2, [((4, 0), 1 / SQRT2), ((0, 4), 1 / SQRT2)])
    assert n4.amplitude((4, 0)) == pytest.approx(1 / SQRT2)
    assert n4.norm_squared() == pytest.approx(1, abs=1e-12)


def test_from_terms_prunes_tiny_amplitudes():
    state = from_terms(2, [((1, 0), 1e-20)], prune_epsilon=1e-14)
    assert state.is_zero()


@pytest.mark.parametrize(
    "entries",
    [
        [((1, 0, 0), 1)],
        [((1, 0), 1), ((1, 0), 2)],
        [((-1, 2), 1)],
    ],
)
def test_from_terms_errors(entries):
    with pytest.raises(ValueError):
        from_terms(2, entries)


def test_terms_are_sorted():
    state = PureState(2, {(0, 2): 1, (2, 0): 1, (1, 1): 1})
    assert list(state.terms) == [(0, 2), (1, 1), (2, 0)]


def test_apply_creation_ladder():
    one = apply_creation(vacuum(2), 0)
    assert dict(one.terms) == {(1, 0): 1}
    two = apply_creation(one, 0)
    assert two.amplitude((2, 0)) == pytest.approx(SQRT2)
    pair = apply_creation(apply_creation(vacuum(2), 0), 1)
    assert pair.amplitude((1, 1)) == pytest.approx(1)


def test_apply_creation_out_of_range():
    with pytest.raises(IndexError):
        apply_creation(vacuum(2), 2)


def test_inner_products_against_eq5_state():
    state = eq5_polynomial()
    vac = vacuum(2)
    assert inner_product(vac, vac) == 1
    assert inner_product(PureState(2, {(4, 0): 1}), state) == pytest.approx(math.sqrt(6) / 4, abs=1e-12)
    assert inner_product(PureState(2, {(2, 2): 1}), state) == pytest.approx(0.5, abs=1e-12)


def test_inner_product_conjugate_linear():
    psi = PureState(2, {(1, 0): 1j, (0, 1): 2})
    chi = PureState(2, {(1, 0): 1, (0, 1): 1})
    assert inner_product(psi, chi) == pytest.approx(-1j + 2)
    assert inner_product(chi, psi) == pytest.approx(1j + 2)
    with pytest.raises(ValueError):
        inner_product(psi, vacuum(3))


def test_normalize():
    state, norm = normalize(PureState(2, {(2, 0): 1, (0, 2): 1}))
    assert norm == pytest.approx(SQRT2)
    assert state.amplitude((2, 0)) == pytest.approx(1 / SQRT2)
    state, norm = normalize(PureState(2, {(1, 0): 2}))
    assert norm == 2 and state.amplitude((1, 0)) == 1
    with pytest.raises(ValueError):
        normalize(PureState(2))


def test_eq5_polynomial_is_unit_norm():
    _, norm = normalize(eq5_polynomial())
    assert norm == pytest.approx(1.0, abs=1e-12)


def test_postselect_squeezed_vacuum():
    sv = squeezed_vacuum(SqueezedVacuumSpec(0.1, 6))
    two, p2 = postselect_total(sv, 2)
    assert dict(two.terms) == pytest.approx({(1, 1): 1})
    four, p4 = postselect_total(sv, 4)
    assert list(four.terms) == [(2, 2)]
    assert abs(four.amplitude((2, 2))) == pytest.approx(1)
    assert p2 > p4 > 0


def test_postselect_empty_sector():
    state, prob = postselect_total(noon(4), 3)
    assert prob == 0 and state.is_zero()


def test_pattern_probability():
    assert pattern_probability(noon(4), (4, 0)) == pytest.approx(0.5)
    assert pattern_probability(eq5_polynomial(), (4, 0)) == pytest.approx(3 / 8, abs=1e-12)
    assert pattern_probability(noon(4), (2, 1)) == 0
    with pytest.raises(ValueError):
        pattern_probability(noon(4), (4, 0, 0))


# -- properties ---------------------------------------------------------------

amplitudes = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)


@st.composite
def small_states(draw, modes=2, max_photons=4):
    kets = draw(
        st.dictionaries(
            st.tuples(*[st.integers(0, max_photons)] * modes), amplitudes, min_size=1, max_size=6
        )
    )
    return PureState(modes, kets)


@given(small_states(), small_states(), amplitudes, amplitudes, st.integers(0, 1))
def test_creation_is_linear(psi, chi, a, b, mode):
    lhs = apply_creation(a * psi + b * chi, mode)
    rhs = a * apply_creation(psi, mode) + b * apply_creation(chi, mode)
    for ket in set(lhs.terms) | set(rhs.terms):
        assert abs(lhs.amplitude(ket) - rhs.amplitude(ket)) < 1e-12


@given(small_states())
def test_self_inner_product_is_sum_of_squares(psi):
    value = inner_product(psi, psi)
    assert abs(value.imag) < 1e-12
    assert value.real == pytest.approx(sum(abs(a) ** 2 for _, a in psi), rel=1e-12)


@given(small_states(modes=3))
def test_postselection_probabilities_sum_to_one(psi):
    if psi.is_zero():
        return
    psi, _ = normalize(psi)
    total = sum(postselect_total(psi, n)[1] for n in psi.photon_totals())
    assert total == pytest.approx(1, abs=1e-12)


@settings(max_examples=50)
@given(st.integers(1, 5), st.data())
def test_sector_pattern_probabilities_sum_to_one(n, data):
    kets = [(k, n - k) for k in range(n + 1)]
    amps = data.draw(st.lists(amplitudes, min_size=len(kets), max_size=len(kets)))
    if all(abs(a) < 1e-6 for a in amps):
        return
    psi, _ = normalize(PureState(2, dict(zip(kets, amps))))
    assert sum(pattern_probability(psi, k) for k in kets) == pytest.approx(1, abs=1e-12)


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                       st.complex_numbers(max_magnitude=1e-13), max_size=8))
def test_pruning_bound(terms):
    eps = 1e-14
    state = PureState(2, terms, prune_epsilon=eps)
    dropped = [a for k, a in terms.items() if k not in state.terms]
    assert sum(abs(a) ** 2 for a in dropped) <= len(dropped) * eps**2 + 1e-300
