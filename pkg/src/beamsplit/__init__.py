"""Wave-optics models of the symmetric slab beamsplitter.

Modules
-------
slab            Fabry-Perot slab amplitudes, black-box matrices, balance phases
interferometer  symmetric Mach-Zehnder, static and with path modulation
coincidence     classical correlation model for coincidence counting
circuit         text description of two-port chains, compiled to one matrix
cli             command-line sweeps emitting CSV
"""

from .coincidence import (
    CoincidenceParams,
    correlation_analytic,
    correlation_numeric,
    hbt_sweep,
    instantaneous_correlation,
    normalized_correlation,
    output_intensities,
    sinc,
)
from .errors import (
    BeamsplitError,
    DomainError,
    NoSolutionError,
    NormalizationError,
    UndefinedPhaseError,
)
from .interferometer import (
    MzOutputs,
    mz_opd,
    mz_phase_opd,
    mz_phase_static,
    mz_quantum,
    mz_static,
    mz_sweep,
)
from .series import SweepSeries
from .slab import (
    InterfaceCoefficients,
    SplitResult,
    absorbing_interface,
    balance_phases,
    bs_sweep,
    classical_bs_matrix,
    fp_split,
    internal_phase,
    lossless_interface,
    quadrature_phase,
    quantum_bs_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BeamsplitError",
    "CoincidenceParams",
    "DomainError",
    "InterfaceCoefficients",
    "MzOutputs",
    "NoSolutionError",
    "NormalizationError",
    "SplitResult",
    "SweepSeries",
    "UndefinedPhaseError",
    "absorbing_interface",
    "balance_phases",
    "bs_sweep",
    "classical_bs_matrix",
    "correlation_analytic",
    "correlation_numeric",
    "fp_split",
    "hbt_sweep",
    "instantaneous_correlation",
    "internal_phase",
    "lossless_interface",
    "mz_opd",
    "mz_phase_opd",
    "mz_phase_static",
    "mz_quantum",
    "mz_static",
    "mz_sweep",
    "normalized_correlation",
    "output_intensities",
    "quadrature_phase",
    "quantum_bs_matrix",
    "sinc",
]
