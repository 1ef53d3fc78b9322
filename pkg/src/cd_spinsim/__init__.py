"""Counter-diabatic electric-field driving of a two-electron double quantum dot.

A two-level simulator for the singlet / lowest-triplet transition: tanh
vector-potential pulses define the reference sweep, an exact counter-diabatic
correction makes it fast, a z-axis frame rotation trades the extra drive
component for reshaped single-axis fields, and fixed-step RK4 integrators
propagate the state with or without dephasing.
"""

from .config import (
    DEFAULT_A0_ALPHA,
    HBAR_MEV_NS,
    MU_B_MEV_PER_T,
    ConfigError,
    DotParams,
    ReducedConstants,
    ValidationError,
    load_config,
    reduce,
    zeeman_splitting,
)
from .dynamics import (
    AnalyticSource,
    ConstantSource,
    NegativeRateError,
    NormDriftError,
    RotatedSource,
    StateTrajectory,
    fidelity,
    propagate_bloch,
    propagate_schrodinger,
)
from .experiments import (
    BenchmarkResult,
    FieldTable,
    SweepResult,
    adiabatic_benchmark,
    cd_benchmark,
    eps_max,
    field_table,
    sweep_dephasing,
    sweep_operation_time,
    sweep_systematic_error,
)
from .hamiltonians import (
    PICTURES,
    REFERENCE,
    ROTATED,
    TOTAL,
    CoefficientFrame,
    CoefficientTrace,
    DegenerateGapError,
    PictureMismatchError,
    RotatedTrace,
    SynthesizedFields,
    adiabaticity_metric,
    cd_field_synthesis,
    coefficient_trace,
    counterdiabatic_coefficient,
    matrix,
    reference_coefficients,
    rotated_picture,
    synthesize_x_only_fields,
)
from .pulses import GridError, PulseShape, PulseTrace, potential, potential_rate, trace

__version__ = "0.1.0"
