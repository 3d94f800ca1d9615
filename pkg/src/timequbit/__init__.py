"""Time-qubit simulations: coherent superpositions of forward and backward evolution."""

from .bell import (
    ChshResult,
    MeasurementSetting,
    ShotRecord,
    bell_state,
    chsh,
    correlation,
    lhv_extremes,
    observable,
    tsirelson_settings,
    sample_chsh,
    sample_correlation,
)
from .dirac import (
    DiracParams,
    EffectiveField,
    clifford_check,
    dirac_hamiltonian,
    effective_field,
    energy,
    gamma_matrices,
    helicity_states,
    majorana_axis_check,
    precess,
    reduced_hamiltonian,
    representation_rotate,
)
from .dynamics import (
    ControlledHamiltonian,
    ZeemanParams,
    evolve_composite,
    h_plus_minus,
    h_tot,
    kraus_pair,
)
from .errors import (
    DegenerateError,
    DimensionError,
    DomainError,
    InvalidStateError,
    PreconditionError,
    TimeQubitError,
)
from .mz import (
    MzConfig,
    PortResult,
    beamsplitter,
    fringe_sweep,
    fringe_visibility,
    run_interferometer,
    which_path_dephase,
)
from .qla import expm_i, herm_eig, partial_trace_system, tensor
from .qubit import (
    BlochAngles,
    BlochVector,
    bloch_from_state,
    bloch_vector,
    density_from_bloch,
    pauli,
    rotate,
    state_from_angles,
)

__version__ = "0.1.0"
