"""Coincidence probabilities, phase scans and fringe analysis."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .fock import BasisKet, PureState
from .network import apply_network, mach_zehnder, output_stage

DEFAULT_GRID_SIZE = 256
HARMONIC_THRESHOLD = 1e-9
PROBABILITY_FLOOR = 1e-15
STAGES = ("full", "output")


class DetectionPattern(BasisKet):
    """Photon counts per detector channel, e.g. ``(3, 1)`` for three in A, one in B."""

    def __new__(cls, counts: Iterable[int]) -> "DetectionPattern":
        self = super().__new__(cls, counts)
        if self.total() < 1:
            raise ValueError("a detection pattern needs at least one photon")
        return self

    @classmethod
    def parse(cls, text: str) -> "DetectionPattern":
        try:
            return cls(int(part) for part in text.split(":"))
        except ValueError as exc:
            raise ValueError(f"bad pattern {text!r}: {exc}") from None

    def label(self) -> str:
        return ":".join(str(n) for n in self)

    def __repr__(self) -> str:
        return f"DetectionPattern({self.label()})"


def phase_grid(grid_size: int) -> np.ndarray:
    if grid_size < 8:
        raise ValueError("grid_size must be at least 8")
    return 2.0 * np.pi * np.arange(grid_size) / grid_size


def _check_uniform(phi: np.ndarray) -> None:
    expected = phase_grid(len(phi))
    if phi.shape != expected.shape or np.max(np.abs(phi - expected)) > 1e-9:
        raise ValueError("phase grid must be uniform over [0, 2*pi) starting at 0")


@dataclass(frozen=True, eq=False)
class FringeTable:
    phi: np.ndarray
    series: Mapping[DetectionPattern, np.ndarray]

    def __post_init__(self):
        phi = np.asarray(self.phi, dtype=float)
        if len(phi) < 8:
            raise ValueError("fringe grid needs at least 8 points")
        _check_uniform(phi)
        series = {}
        for pattern in sorted(self.series):
            values = np.asarray(self.series[pattern], dtype=float)
            if values.shape != phi.shape:
                raise ValueError(f"series for {pattern!r} does not match the grid")
            if np.any(values < -1e-12) or np.any(values > 1 + 1e-12):
                raise ValueError(f"series for {pattern!r} leaves [0, 1]")
            series[DetectionPattern(pattern)] = values
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "series", series)

    @property
    def patterns(self) -> list[DetectionPattern]:
        return list(self.series)

    def __getitem__(self, pattern: Iterable[int]) -> np.ndarray:
        return self.series[tuple(pattern)]

    def sector_total(self, n_photons: int) -> np.ndarray:
        """Summed probability of all patterns carrying ``n_photons`` photons."""
        total = np.zeros_like(self.phi)
        for pattern, values in self.series.items():
            if pattern.total() == n_photons:
                total += values
        return total


def coincidence_distribution(state: PureState) -> dict[DetectionPattern, float]:
    norm2 = state.norm_squared()
    if abs(norm2 - 1.0) > 1e-9:
        raise ValueError(f"state is not normalized (norm^2 = {norm2:.12g})")
    dist = {}
    for ket, amp in state:
        p = abs(amp) ** 2
        if ket.total() >= 1 and p >= PROBABILITY_FLOOR:
            dist[DetectionPattern(ket)] = p
    return dist


def fringe_scan(
    state: PureState, grid_size: int = DEFAULT_GRID_SIZE, stage: str = "full"
) -> FringeTable:
    """Sweep the arm phase over one period and record every detection pattern.

    ``stage="full"`` sends ``state`` through the whole Mach-Zehnder;
    ``stage="output"`` treats it as already inside the interferometer and
    applies only the phase and the output mixer.
    """
    if stage not in STAGES:
        raise ValueError(f"stage must be one of {STAGES}, got {stage!r}")
    if state.mode_count != 2:
        raise ValueError("fringe scans need a two-mode input")
    build = mach_zehnder if stage == "full" else output_stage
    phi = phase_grid(grid_size)
    rows = [coincidence_distribution(apply_network(state, build(p))) for p in phi]
    patterns = sorted(set().union(*rows))
    series = {pat: np.array([row.get(pat, 0.0) for row in rows]) for pat in patterns}
    return FringeTable(phi, series)


def visibility(series: Sequence[float]) -> float:
    values = np.asarray(series, dtype=float)
    if values.size == 0:
        raise ValueError("empty series")
    if np.any(values < 0):
        raise ValueError("visibility needs non-negative values")
    hi, lo = values.max(), values.min()
    if hi + lo == 0:
        return 0.0
    return float((hi - lo) / (hi + lo))


def harmonic_spectrum(
    series: Sequence[float],
    phi: Sequence[float] | None = None,
    threshold: float = HARMONIC_THRESHOLD,
) -> dict[int, float]:
    """Amplitudes ``A_k`` in ``series(phi) = sum_k A_k cos(k phi + delta_k)``.

    The samples must lie on a uniform grid covering exactly one period; pass
    ``phi`` to have that checked. Harmonics with amplitude at or below
    ``threshold`` are dropped.
    """
    values = np.asarray(series, dtype=float)
    if values.ndim != 1 or values.size < 2:
        raise ValueError("need a one-dimensional series with at least two samples")
    if phi is not None:
        grid = np.asarray(phi, dtype=float)
        if grid.shape != values.shape:
            raise ValueError("phi and series lengths differ")
        _check_uniform(grid)
    n = values.size
    coeffs = np.abs(np.fft.rfft(values)) / n
    coeffs[1:] *= 2.0
    if n % 2 == 0:
        coeffs[-1] /= 2.0  # Nyquist bin has no mirror partner
    return {k: float(c) for k, c in enumerate(coeffs) if c > threshold}


def debroglie_reduction_factor(
    series: Sequence[float],
    threshold: float = HARMONIC_THRESHOLD,
    phi: Sequence[float] | None = None,
) -> int:
    """Highest harmonic present: 1 for single-photon fringes, N for an N-photon NOON fringe."""
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    if not np.any(np.asarray(series, dtype=float)):
        raise ValueError("all-zero series has no fringe")
    spectrum = harmonic_spectrum(series, phi=phi, threshold=threshold)
    return max(spectrum, default=0)


def single_photon_response(phi):
    """Detector probabilities ``(P_A, P_B)`` for one photon in the upper input port."""
    s = np.sin(phi)
    return (1 + s) / 2, (1 - s) / 2


def classical_reference(pattern: Iterable[int], phi):
    """Product of independent single-photon responses, ``P_A^nA * P_B^nB``."""
    n_a, n_b = DetectionPattern(pattern)
    p_a, p_b = single_photon_response(phi)
    return p_a**n_a * p_b**n_b


def multiport_resolution_fraction(n_photons: int, n_ports: int) -> Fraction:
    if n_photons < 1 or n_ports < 1:
        raise ValueError("n_photons and n_ports must be positive")
    return Fraction(math.perm(n_ports, n_photons), n_ports**n_photons)


def multiport_resolution_probability(n_photons: int, n_ports: int) -> float:
    """Chance that ``n_photons`` spread by a symmetric ``n_ports`` splitter all land in different ports.

    Only then do ``n_ports`` on/off detectors count every photon. Photons are
    routed independently and uniformly, so this is ``P(ports, n) / ports**n``
    and vanishes when there are more photons than ports.
    """
    return float(multiport_resolution_fraction(n_photons, n_ports))
