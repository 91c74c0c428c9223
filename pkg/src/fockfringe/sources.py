"""Input states: down-conversion output, pair Fock states, NOON and kitten states."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fock import PureState, normalize
from .network import sqrt_factorial

DEFAULT_PAIR_CUTOFF = 10


@dataclass(frozen=True)
class SqueezedVacuumSpec:
    """Two-mode squeezed vacuum ``sum_n alpha^n |n, n>`` truncated after ``pair_cutoff`` pairs."""

    alpha: complex
    pair_cutoff: int = DEFAULT_PAIR_CUTOFF

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        _check_alpha(self.alpha)
        if self.pair_cutoff < 0:
            raise ValueError("pair_cutoff must be non-negative")


def _check_alpha(alpha: complex) -> None:
    if not abs(alpha) < 1:
        raise ValueError(f"|alpha| must be below 1, got {abs(alpha)}")


def squeezed_vacuum(spec: SqueezedVacuumSpec) -> PureState:
    # (alpha a^dag b^dag)^n / n! |0> = alpha^n |n, n>, so amplitudes are geometric
    terms = {(n, n): spec.alpha**n for n in range(spec.pair_cutoff + 1)}
    state, _ = normalize(PureState(2, terms, prune_epsilon=0.0))
    return state


def pair_detection_probability(alpha: complex, n_pairs: int) -> float:
    """Probability of finding exactly ``n_pairs`` pairs in the untruncated, unit-norm state."""
    _check_alpha(alpha)
    r2 = abs(alpha) ** 2
    return (1.0 - r2) * r2**n_pairs


def unnormalized_pair_rate(alpha: complex, n_pairs: int) -> float:
    """``|alpha|^(2n) / (1 - |alpha|^2)``.

    This is the pair-detection rate obtained with the prefactor
    ``1/sqrt(1 - |alpha|^2)`` in front of the down-conversion series. Summed
    over all ``n`` it gives ``1/(1 - |alpha|^2)**2`` rather than 1, so it is
    reported for comparison only and differs from
    :func:`pair_detection_probability` by the factor ``(1 - |alpha|^2)**2``.
    """
    _check_alpha(alpha)
    r2 = abs(alpha) ** 2
    return r2**n_pairs / (1.0 - r2)


def pair_fock(n_pairs: int) -> PureState:
    if n_pairs < 0:
        raise ValueError("n_pairs must be non-negative")
    return PureState(2, {(n_pairs, n_pairs): 1.0})


def single_photon() -> PureState:
    """One photon in the upper input port."""
    return PureState(2, {(1, 0): 1.0})


def noon(n_photons: int) -> PureState:
    if n_photons < 1:
        raise ValueError("NOON state needs at least one photon")
    amp = 1.0 / math.sqrt(2.0)
    return PureState(2, {(n_photons, 0): amp, (0, n_photons): amp})


def kitten_input(n: int) -> PureState:
    """``[(a-b)^{2n} + (a+b)^{2n}] |0>``, normalized, with ``a``, ``b`` creation operators.

    Coefficients of ``a^k b^{2n-k}`` are the exact integers
    ``C(2n, k) * (1 + (-1)^(2n-k))``; only even ``k`` survive.
    """
    if n < 1:
        raise ValueError("kitten input needs n >= 1")
    total = 2 * n
    terms = {}
    for k in range(total + 1):
        coeff = math.comb(total, k) * (1 + (-1) ** (total - k))
        if coeff:
            terms[(k, total - k)] = coeff * sqrt_factorial(k) * sqrt_factorial(total - k)
    scale = 1.0 / math.sqrt(2 ** (total + 1) * math.factorial(total))
    return PureState(2, {ket: c * scale for ket, c in terms.items()})
