"""Entanglement transfer through phase-shifted ferromagnetic spin rings (one-magnon sector)."""

__version__ = "0.1.0"

from .bessel import bessel_j
from .dynamics import (
    PropagatorRequest,
    asymptotic_concurrence_isolated,
    asymptotic_concurrence_pair,
    concurrence_series,
    evolve,
)
from .entanglement import (
    TwoQubitDensity,
    concurrence_fast,
    reduce_to_pair,
    wootters_concurrence,
)
from .model import (
    AcFieldConfig,
    AcGeometry,
    Boundary,
    CapacityError,
    ChainConfig,
    DmConfig,
    InChainPair,
    IsolatedSpin,
    MagnonAmplitudes,
    ValidationError,
    ac_phase_per_link,
    make_initial_amplitudes,
)
from .spectrum import (
    Spectrum,
    dm_spectrum,
    obc_gauge_transform,
    open_eigenvector,
    open_spectrum,
    ring_eigenvector,
    ring_spectrum,
)
from .sweep import SweepResult, SweepSpec, cmax_table, run_sweep, theta_representative
