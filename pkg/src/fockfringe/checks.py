"""Closed-form comparisons run by ``fockfringe verify``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import analysis, fock, network, oracle, sources


@dataclass
class CheckResult:
    name: str
    deviation: float
    tolerance: float
    note: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.deviation <= self.tolerance)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name:<40s} max dev {self.deviation:.3e} (tol {self.tolerance:.0e})"
        return f"{text}  {self.note}" if self.note else text


def _max_dev(table, expected: dict) -> float:
    return max(float(np.max(np.abs(table[p] - f))) for p, f in expected.items())


def single_photon(grid_size: int = 256) -> CheckResult:
    table = analysis.fringe_scan(sources.single_photon(), grid_size)
    phi = table.phi
    dev = _max_dev(table, {(1, 0): (1 + np.sin(phi)) / 2, (0, 1): (1 - np.sin(phi)) / 2})
    return CheckResult("single-photon fringes", dev, 1e-10)


def two_photon(grid_size: int = 256) -> CheckResult:
    table = analysis.fringe_scan(sources.pair_fock(1), grid_size)
    c2 = np.cos(2 * table.phi)
    expected = {(2, 0): (1 + c2) / 4, (0, 2): (1 + c2) / 4, (1, 1): (1 - c2) / 2}
    return CheckResult("two-photon fringes", _max_dev(table, expected), 1e-10)


def four_photon(grid_size: int = 256) -> CheckResult:
    table = analysis.fringe_scan(sources.pair_fock(2), grid_size)
    c2, c4 = np.cos(2 * table.phi), np.cos(4 * table.phi)
    edge = (9 + 12 * c2 + 3 * c4) / 64
    odd = (3 - 3 * c4) / 16
    expected = {(4, 0): edge, (0, 4): edge, (3, 1): odd, (1, 3): odd,
                (2, 2): (11 - 12 * c2 + 9 * c4) / 32}
    dev = _max_dev(table, expected)
    dev = max(dev, float(np.max(np.abs(sum(table[p] for p in expected) - 1))))
    return CheckResult("four-photon fringes + completeness", dev, 1e-10)


def noon_fraction() -> list[CheckResult]:
    inside = network.apply_beam_splitter(sources.pair_fock(2), network.BeamSplitter())
    frac = fock.pattern_probability(inside, (4, 0)) + fock.pattern_probability(inside, (0, 4))
    return [
        CheckResult("NOON fraction of split |2,2>", abs(frac - 0.75), 1e-12, f"value {frac:.15f}"),
        CheckResult("<2,2> amplitude of split |2,2>", abs(inside.amplitude((2, 2)) - 0.5), 1e-12),
    ]


def spectrum_purity(grid_size: int = 256) -> list[CheckResult]:
    table = analysis.fringe_scan(sources.pair_fock(2), grid_size)
    series = table[(3, 1)]
    spectrum = analysis.harmonic_spectrum(series, table.phi)
    support_dev = 0.0 if set(spectrum) == {0, 4} else 1.0
    factor = analysis.debroglie_reduction_factor(series, phi=table.phi)
    return [
        CheckResult("P(3,1) harmonic support {0,4}", support_dev, 0.0, f"support {sorted(spectrum)}"),
        CheckResult("P(3,1) visibility", abs(analysis.visibility(series) - 1), 1e-10),
        CheckResult("P(3,1) reduction factor 4", float(abs(factor - 4)), 0.0),
    ]


def mandel_dip() -> CheckResult:
    bs = network.BeamSplitter()
    two = network.apply_beam_splitter(sources.pair_fock(1), bs)
    four = network.apply_beam_splitter(sources.pair_fock(2), bs)
    dev = max(abs(two.amplitude((1, 1))), abs(four.amplitude((3, 1))), abs(four.amplitude((1, 3))))
    return CheckResult("odd-split suppression at the splitter", dev, 1e-12)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def oracle_equivalence(n_unitaries: int = 20, max_photons: int = 4, seed: int = 7) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    amp_dev = norm_dev = 0.0
    kets = [(a, n - a) for n in range(max_photons + 1) for a in range(n + 1)]
    for _ in range(n_unitaries):
        u = random_unitary(rng, 2)
        bs = network.BeamSplitter(matrix=u)
        for ket in kets:
            out = network.apply_beam_splitter(fock.fock_state(*ket), bs)
            norm_dev = max(norm_dev, abs(out.norm_squared() - 1))
            total = sum(ket)
            for target in ((s, total - s) for s in range(total + 1)):
                ref = oracle.transition_amplitude_oracle(u, ket, target)
                amp_dev = max(amp_dev, abs(out.amplitude(target) - ref))
    return [
        CheckResult("splitter vs brute-force oracle", amp_dev, 1e-9),
        CheckResult("splitter norm preservation", norm_dev, 1e-10),
    ]


def kitten_six_photon(grid_size: int = 256) -> list[CheckResult]:
    table = analysis.fringe_scan(sources.kitten_input(3), grid_size)
    series = table[(5, 1)]
    spectrum = analysis.harmonic_spectrum(series, table.phi)
    return [
        CheckResult("kitten(3) P(5,1) support {0,6}", 0.0 if set(spectrum) == {0, 6} else 1.0,
                    0.0, f"support {sorted(spectrum)}"),
        CheckResult("kitten(3) P(5,1) visibility", abs(analysis.visibility(series) - 1), 1e-10),
    ]


def squeezed_postselection(alpha: float = 0.2, cutoff: int = 30) -> CheckResult:
    state = sources.squeezed_vacuum(sources.SqueezedVacuumSpec(alpha, cutoff))
    dev = 0.0
    notes = []
    for n in range(5):
        weight = fock.pattern_probability(state, (n, n))
        dev = max(dev, abs(weight - sources.pair_detection_probability(alpha, n)))
        if n in (1, 2):
            notes.append(
                f"n={n}: {weight:.6g} (unnormalized-prefactor rate "
                f"{sources.unnormalized_pair_rate(alpha, n):.6g})"
            )
    return CheckResult("squeezed vacuum pair weights", dev, 1e-10, "; ".join(notes))


def multiport() -> CheckResult:
    dev = 0.0
    for n_ports in range(1, 7):
        for n in range(1, 6):
            hits = sum(
                len(set(route)) == n for route in itertools.product(range(n_ports), repeat=n)
            )
            exact = Fraction(hits, n_ports**n)
            if analysis.multiport_resolution_fraction(n, n_ports) != exact:
                dev = 1.0
            if analysis.multiport_resolution_probability(n, n_ports) != float(exact):
                dev = 1.0
    if analysis.multiport_resolution_fraction(4, 4) != Fraction(3, 32):
        dev = 1.0
    return CheckResult("multiport model vs enumeration", dev, 0.0)


def run_all() -> list[CheckResult]:
    results = [single_photon(), two_photon(), four_photon()]
    results += noon_fraction()
    results += spectrum_purity()
    results.append(mandel_dip())
    results += oracle_equivalence()
    results += kitten_six_photon()
    results.append(squeezed_postselection())
    results.append(multiport())
    return results
