"""Brute-force transition amplitudes for validating the network code.

Nothing here is used on the production path. ``transition_amplitude_oracle``
expands the full operator product term by term; ``permanent_amplitude`` is
the textbook permanent formula. They are deliberately slow and share no code
with :mod:`fockfringe.network`.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

import numpy as np


def _check_matrix(unitary, n_modes: int) -> np.ndarray:
    u = np.asarray(unitary, dtype=complex)
    if u.shape != (n_modes, n_modes):
        raise ValueError(f"matrix shape {u.shape} does not match {n_modes} modes")
    if np.max(np.abs(u @ u.conj().T - np.eye(n_modes))) > 1e-12:
        raise ValueError("matrix is not unitary within 1e-12")
    return u


def _check_kets(input_ket, output_ket) -> tuple[tuple[int, ...], tuple[int, ...]]:
    inp, out = tuple(input_ket), tuple(output_ket)
    if len(inp) != len(out):
        raise ValueError(f"ket lengths differ: {len(inp)} vs {len(out)}")
    return inp, out


def transition_amplitude_oracle(unitary, input_ket, output_ket) -> complex:
    """``<output| U |input>`` by distributive expansion.

    Each input photon in mode ``j`` is replaced by ``sum_k U[j, k] c_k^dagger``.
    Every one of the ``m**N`` choices of output mode per photon is visited and
    its coefficient added to the monomial it produces.
    """
    inp, out = _check_kets(input_ket, output_ket)
    u = _check_matrix(unitary, len(inp))
    if sum(inp) != sum(out):
        return 0j
    photons = [j for j, n in enumerate(inp) for _ in range(n)]
    monomials: Counter = Counter()
    for choice in itertools.product(range(len(inp)), repeat=len(photons)):
        coeff = 1 + 0j
        for j, k in zip(photons, choice):
            coeff *= u[j, k]
        occupation = tuple(choice.count(k) for k in range(len(inp)))
        monomials[occupation] += coeff
    norm_in = math.prod(math.factorial(n) for n in inp)
    norm_out = math.prod(math.factorial(n) for n in out)
    return complex(monomials.get(out, 0j) * math.sqrt(norm_out / norm_in))


def permanent(matrix) -> complex:
    """Permanent by summing over all permutations."""
    a = np.asarray(matrix, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("permanent needs a square matrix")
    total = 0j
    for perm in itertools.permutations(range(n)):
        term = 1 + 0j
        for row, col in enumerate(perm):
            term *= a[row, col]
        total += term
    return total


def permanent_amplitude(unitary, input_ket, output_ket) -> complex:
    """Same amplitude as the oracle, via the permanent of a repeated submatrix."""
    inp, out = _check_kets(input_ket, output_ket)
    u = _check_matrix(unitary, len(inp))
    if sum(inp) != sum(out):
        return 0j
    rows = [j for j, n in enumerate(inp) for _ in range(n)]
    cols = [k for k, n in enumerate(out) for _ in range(n)]
    sub = u[np.ix_(rows, cols)]
    norm = math.prod(math.factorial(n) for n in inp + out)
    return permanent(sub) / math.sqrt(norm)
