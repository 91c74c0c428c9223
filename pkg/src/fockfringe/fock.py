"""Sparse pure states over multi-mode bosonic Fock space.

A state is a map from occupation tuples ``(n_0, n_1, ...)`` to complex
amplitudes. Mode 0 is the upper rail of the interferometer at every stage
(input port a, internal arm u, detector A); mode 1 is the lower rail
(b, l, B).
"""

from __future__ import annotations

import math
import operator
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

DEFAULT_PRUNE_EPSILON = 1e-14
NORM_TOLERANCE = 1e-12


class BasisKet(tuple):
    """Occupation-number label ``|n_0, n_1, ...>``."""

    def __new__(cls, occupations: Iterable[int]) -> "BasisKet":
        occ = tuple(operator.index(n) for n in occupations)
        if any(n < 0 for n in occ):
            raise ValueError(f"negative occupation in {occ}")
        return super().__new__(cls, occ)

    def total(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return "|" + ",".join(str(n) for n in self) + ">"


class PureState:
    """Immutable sparse superposition of Fock basis kets.

    Amplitudes with magnitude ``<= prune_epsilon`` are dropped on
    construction, and terms are kept in lexicographic ket order so that
    iteration (and anything serialized from it) is deterministic.
    """

    __slots__ = ("mode_count", "prune_epsilon", "_terms")

    def __init__(
        self,
        mode_count: int,
        terms: Mapping[tuple, complex] | None = None,
        prune_epsilon: float = DEFAULT_PRUNE_EPSILON,
    ):
        mode_count = operator.index(mode_count)
        if mode_count < 1:
            raise ValueError("mode_count must be positive")
        if prune_epsilon < 0:
            raise ValueError("prune_epsilon must be non-negative")
        checked = {}
        for ket, amp in (terms or {}).items():
            ket = BasisKet(ket)
            if len(ket) != mode_count:
                raise ValueError(f"ket {ket!r} does not have {mode_count} modes")
            checked[ket] = complex(amp)
        self._init(mode_count, checked, prune_epsilon)

    def _init(self, mode_count, terms, prune_epsilon):
        self.mode_count = mode_count
        self.prune_epsilon = prune_epsilon
        kept = {k: terms[k] for k in sorted(terms) if abs(terms[k]) > prune_epsilon}
        self._terms = MappingProxyType(kept)

    @classmethod
    def _trusted(cls, mode_count, terms, prune_epsilon=DEFAULT_PRUNE_EPSILON):
        # kets already validated by the caller
        state = cls.__new__(cls)
        state._init(mode_count, {BasisKet(k): v for k, v in terms.items()}, prune_epsilon)
        return state

    @property
    def terms(self) -> Mapping[BasisKet, complex]:
        return self._terms

    def amplitude(self, ket: Iterable[int]) -> complex:
        return self._terms.get(tuple(ket), 0j)

    def norm_squared(self) -> float:
        return math.fsum(abs(a) ** 2 for a in self._terms.values())

    def photon_totals(self) -> list[int]:
        return sorted({k.total() for k in self._terms})

    def is_zero(self) -> bool:
        return not self._terms

    def with_terms(self, terms: Mapping[tuple, complex]) -> "PureState":
        return PureState._trusted(self.mode_count, terms, self.prune_epsilon)

    def scaled(self, factor: complex) -> "PureState":
        return self.with_terms({k: factor * a for k, a in self._terms.items()})

    def __iter__(self) -> Iterator[tuple[BasisKet, complex]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "PureState") -> "PureState":
        _check_modes(self, other)
        out = dict(self._terms)
        for k, a in other:
            out[k] = out.get(k, 0j) + a
        return self.with_terms(out)

    def __rmul__(self, factor: complex) -> "PureState":
        return self.scaled(factor)

    def __repr__(self) -> str:
        body = " + ".join(f"({a:.6g}){k!r}" for k, a in self._terms.items())
        return f"PureState({self.mode_count}, {body or '0'})"


def _check_modes(lhs: PureState, rhs: PureState) -> None:
    if lhs.mode_count != rhs.mode_count:
        raise ValueError(f"mode count mismatch: {lhs.mode_count} vs {rhs.mode_count}")


def from_terms(
    mode_count: int,
    entries: Iterable[tuple[Iterable[int], complex]],
    prune_epsilon: float = DEFAULT_PRUNE_EPSILON,
) -> PureState:
    """Build a state from ``(ket, amplitude)`` pairs. No normalization is applied."""
    terms = {}
    for ket, amp in entries:
        ket = BasisKet(ket)
        if ket in terms:
            raise ValueError(f"duplicate ket {ket!r}")
        terms[ket] = amp
    return PureState(mode_count, terms, prune_epsilon)


def vacuum(mode_count: int = 2) -> PureState:
    return PureState(mode_count, {(0,) * mode_count: 1.0})


def fock_state(*occupations: int) -> PureState:
    """Single basis ket with unit amplitude, e.g. ``fock_state(2, 2)``."""
    return PureState(len(occupations), {occupations: 1.0})


def apply_creation(state: PureState, mode: int) -> PureState:
    if not 0 <= mode < state.mode_count:
        raise IndexError(f"mode {mode} out of range for {state.mode_count} modes")
    out = {}
    for ket, amp in state:
        n = ket[mode]
        raised = ket[:mode] + (n + 1,) + ket[mode + 1:]
        out[raised] = amp * math.sqrt(n + 1)
    return state.with_terms(out)


def inner_product(lhs: PureState, rhs: PureState) -> complex:
    """``<lhs|rhs>``, conjugate-linear in the first argument."""
    _check_modes(lhs, rhs)
    small, large = (lhs, rhs) if len(lhs) <= len(rhs) else (rhs, lhs)
    acc = 0j
    for ket in small.terms:
        if ket in large.terms:
            acc += lhs.terms[ket].conjugate() * rhs.terms[ket]
    return acc


def normalize(state: PureState) -> tuple[PureState, float]:
    norm = math.sqrt(state.norm_squared())
    if norm == 0.0:
        raise ValueError("cannot normalize the zero state")
    return state.scaled(1.0 / norm), norm


def postselect_total(state: PureState, n_total: int) -> tuple[PureState, float]:
    """Project onto the sector with ``n_total`` photons in all modes.

    Returns the renormalized component and its probability. An empty sector
    gives the zero state with probability 0.
    """
    sector = {k: a for k, a in state if k.total() == n_total}
    probability = math.fsum(abs(a) ** 2 for a in sector.values())
    if probability == 0.0:
        return state.with_terms({}), 0.0
    scale = 1.0 / math.sqrt(probability)
    return state.with_terms({k: a * scale for k, a in sector.items()}), probability


def pattern_probability(state: PureState, ket: Iterable[int]) -> float:
    ket = BasisKet(ket)
    if len(ket) != state.mode_count:
        raise ValueError(f"ket {ket!r} does not match {state.mode_count} modes")
    return abs(state.amplitude(ket)) ** 2
