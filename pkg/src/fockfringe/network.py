"""Linear-optical elements acting on Fock states.

Every element is a substitution rule for creation operators: the operator of
mode ``j`` before the element is replaced by ``sum_k M[j, k] c_k^dagger``
written in the operators after it. A basis ket is the polynomial
``prod_j (c_j^dagger)^{n_j} / sqrt(n_j!)`` acting on vacuum, so applying an
element means expanding that polynomial and reading off the monomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

import numpy as np

from .fock import PureState

UNITARY_TOLERANCE = 1e-12

#: a^dagger = (u^dagger + i l^dagger)/sqrt(2), b^dagger = (u^dagger - i l^dagger)/sqrt(2)
BALANCED = np.array([[1.0, 1.0j], [1.0, -1.0j]]) / math.sqrt(2.0)


@lru_cache(maxsize=None)
def sqrt_factorial(n: int) -> float:
    return math.sqrt(math.factorial(n))


def _as_unitary(matrix, size: int | None = None) -> np.ndarray:
    m = np.array(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if size is not None and m.shape[0] != size:
        raise ValueError(f"expected a {size}x{size} matrix, got shape {m.shape}")
    dev = np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0])))
    if dev > UNITARY_TOLERANCE:
        raise ValueError(f"matrix is not unitary (max deviation {dev:.3g})")
    m.setflags(write=False)
    return m


@dataclass(frozen=True, eq=False)
class BeamSplitter:
    """Two-mode element; row ``j`` of ``matrix`` is the image of ``modes[j]``."""

    modes: tuple[int, int] = (0, 1)
    matrix: np.ndarray = field(default_factory=lambda: BALANCED)

    def __post_init__(self):
        p, q = self.modes
        if p == q:
            raise ValueError("beam splitter needs two distinct modes")
        if p < 0 or q < 0:
            raise ValueError(f"negative mode index in {self.modes}")
        object.__setattr__(self, "modes", (int(p), int(q)))
        object.__setattr__(self, "matrix", _as_unitary(self.matrix, 2))

    def max_mode(self) -> int:
        return max(self.modes)


@dataclass(frozen=True)
class PhaseShifter:
    """Delays ``mode`` by ``phi`` radians: its creation operator picks up e^{i phi}."""

    mode: int
    phi: float

    def __post_init__(self):
        if self.mode < 0:
            raise ValueError(f"negative mode index {self.mode}")
        if not math.isfinite(self.phi):
            raise ValueError("phase must be finite")

    def max_mode(self) -> int:
        return self.mode


Element = Union[BeamSplitter, PhaseShifter]


@dataclass(frozen=True, eq=False)
class Network:
    mode_count: int
    elements: tuple[Element, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if self.mode_count < 1:
            raise ValueError("mode_count must be positive")
        for el in self.elements:
            if el.max_mode() >= self.mode_count:
                raise ValueError(f"{el} addresses a mode outside 0..{self.mode_count - 1}")

    def unitary(self) -> np.ndarray:
        """Overall substitution matrix: input operator j -> sum_k U[j, k] output_k."""
        total = np.eye(self.mode_count, dtype=complex)
        for el in self.elements:
            total = total @ element_matrix(el, self.mode_count)
        return total


def element_matrix(element: Element, mode_count: int) -> np.ndarray:
    m = np.eye(mode_count, dtype=complex)
    if isinstance(element, PhaseShifter):
        m[element.mode, element.mode] = np.exp(1j * element.phi)
    else:
        p, q = element.modes
        m[np.ix_([p, q], [p, q])] = element.matrix
    return m


def _check_range(state: PureState, element: Element) -> None:
    if element.max_mode() >= state.mode_count:
        raise IndexError(f"{element} addresses a mode outside a {state.mode_count}-mode state")


def _binomial_row(c0: complex, c1: complex, n: int) -> list[complex]:
    # coefficients of x^j y^(n-j) in (c0 x + c1 y)^n, indexed by j
    return [math.comb(n, j) * c0**j * c1 ** (n - j) for j in range(n + 1)]


def apply_beam_splitter(state: PureState, bs: BeamSplitter) -> PureState:
    _check_range(state, bs)
    p, q = bs.modes
    (m00, m01), (m10, m11) = bs.matrix.tolist()
    out: dict[tuple, complex] = {}
    cache: dict[tuple[int, int], list[tuple[int, complex]]] = {}
    for ket, amp in state:
        n, m = ket[p], ket[q]
        if (n, m) not in cache:
            row_p = _binomial_row(m00, m01, n)
            row_q = _binomial_row(m10, m11, m)
            total = n + m
            poly = [0j] * (total + 1)
            for j, cj in enumerate(row_p):
                for k, ck in enumerate(row_q):
                    poly[j + k] += cj * ck
            norm = sqrt_factorial(n) * sqrt_factorial(m)
            cache[(n, m)] = [
                (s, c * sqrt_factorial(s) * sqrt_factorial(total - s) / norm)
                for s, c in enumerate(poly)
                if c != 0
            ]
        base = list(ket)
        for s, coeff in cache[(n, m)]:
            base[p], base[q] = s, n + m - s
            key = tuple(base)
            out[key] = out.get(key, 0j) + amp * coeff
    return state.with_terms(out)


def apply_phase(state: PureState, ps: PhaseShifter) -> PureState:
    _check_range(state, ps)
    phase = np.exp(1j * ps.phi)
    return state.with_terms({k: a * phase ** k[ps.mode] for k, a in state})


def apply_element(state: PureState, element: Element) -> PureState:
    if isinstance(element, PhaseShifter):
        return apply_phase(state, element)
    return apply_beam_splitter(state, element)


def apply_network(state: PureState, net: Network) -> PureState:
    if state.mode_count != net.mode_count:
        raise ValueError(
            f"network has {net.mode_count} modes but state has {state.mode_count}"
        )
    for el in net.elements:
        state = apply_element(state, el)
    return state


def mach_zehnder(phi: float) -> Network:
    """Balanced input splitter, phase ``phi`` on the upper arm, balanced output mixer."""
    return Network(2, (BeamSplitter(), PhaseShifter(0, phi), BeamSplitter()))


def output_stage(phi: float) -> Network:
    """Phase plus output mixer only, for states prepared inside the interferometer."""
    return Network(2, (PhaseShifter(0, phi), BeamSplitter()))

