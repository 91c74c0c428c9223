"""Exact Fock-space simulation of multi-photon Mach-Zehnder interferometry."""

from .analysis import (
    DetectionPattern,
    FringeTable,
    classical_reference,
    coincidence_distribution,
    debroglie_reduction_factor,
    fringe_scan,
    harmonic_spectrum,
    multiport_resolution_probability,
    visibility,
)
from .fock import (
    BasisKet,
    PureState,
    apply_creation,
    fock_state,
    from_terms,
    inner_product,
    normalize,
    pattern_probability,
    postselect_total,
    vacuum,
)
from .network import (
    BeamSplitter,
    Network,
    PhaseShifter,
    apply_beam_splitter,
    apply_network,
    apply_phase,
    mach_zehnder,
    output_stage,
)
from .oracle import transition_amplitude_oracle
from .sources import (
    SqueezedVacuumSpec,
    kitten_input,
    noon,
    pair_detection_probability,
    pair_fock,
    single_photon,
    squeezed_vacuum,
)

__version__ = "0.1.0"

__all__ = [
    "BasisKet",
    "BeamSplitter",
    "DetectionPattern",
    "FringeTable",
    "Network",
    "PhaseShifter",
    "PureState",
    "SqueezedVacuumSpec",
    "apply_beam_splitter",
    "apply_creation",
    "apply_network",
    "apply_phase",
    "classical_reference",
    "coincidence_distribution",
    "debroglie_reduction_factor",
    "fock_state",
    "fringe_scan",
    "from_terms",
    "harmonic_spectrum",
    "inner_product",
    "kitten_input",
    "mach_zehnder",
    "multiport_resolution_probability",
    "noon",
    "normalize",
    "output_stage",
    "pair_detection_probability",
    "pair_fock",
    "pattern_probability",
    "postselect_total",
    "single_photon",
    "squeezed_vacuum",
    "transition_amplitude_oracle",
    "vacuum",
    "visibility",
]
