"""Symmetric Mach-Zehnder interferometer built from two identical slab
beamsplitters and two ideal mirrors.

Port 1' is the constructive output and port 2' the destructive one. With
unit input in port 1 and an optical path difference ``k_delta`` added to the
transmitted arm of the first beamsplitter:

    a1p = a_t a_r (1 + exp(i k_delta))
    a2p = a_t^2 exp(i k_delta) + a_r^2

For a lossless slab a_t conj(a_r) is purely imaginary, which is what makes
|a1p|^2 + |a2p|^2 = 1.

The quantum description multiplies black-box matrices, BS @ D(k_delta) @ BS.
The raw product sends the cos^2(k_delta/2) intensity to its second
component, so :func:`mz_quantum` reports that component as port 1'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DomainError, NormalizationError
from .numeric import amplitude_phase, relative_phase, relative_phase_strict
from .series import SweepSeries
from .slab import InterfaceCoefficients, SplitResult, balance_phases, fp_split, quantum_bs_matrix


@dataclass(frozen=True)
class MzOutputs:
    """Output amplitudes of the interferometer (scalars or arrays)."""

    a1p: complex | np.ndarray
    a2p: complex | np.ndarray

    @property
    def i1p(self):
        return np.abs(self.a1p) ** 2

    @property
    def i2p(self):
        return np.abs(self.a2p) ** 2

    @property
    def energy(self):
        return self.i1p + self.i2p


def delay_matrix(k_delta: float) -> np.ndarray:
    """Path-difference matrix diag(exp(i k_delta), 1) acting on port 1."""
    return np.array([[np.exp(1j * k_delta), 0.0], [0.0, 1.0]], dtype=complex)


def mz_opd(s: SplitResult, k_delta, arm: Literal["transmitted", "reflected"] = "transmitted") -> MzOutputs:
    """Outputs with path difference ``k_delta`` (radians) on one arm of BS1.

    ``arm="reflected"`` moves the modulation to the reflected arm, which
    conjugates the fringe phase but leaves the intensities unchanged.
    """
    mod = np.exp(1j * np.asarray(k_delta, dtype=float))
    a1p = s.a_t * s.a_r * (1.0 + mod)
    if arm == "transmitted":
        a2p = s.a_t * s.a_t * mod + s.a_r * s.a_r
    elif arm == "reflected":
        a2p = s.a_t * s.a_t + s.a_r * s.a_r * mod
    else:
        raise DomainError(f"arm must be 'transmitted' or 'reflected', got {arm!r}")
    if np.ndim(a1p) == 0:
        return MzOutputs(complex(a1p), complex(a2p))
    return MzOutputs(a1p, a2p)


def mz_static(s: SplitResult) -> MzOutputs:
    """Outputs at zero path difference: a1p = 2 a_t a_r, a2p = a_t^2 + a_r^2."""
    a1p = 2.0 * s.a_t * s.a_r
    a2p = s.a_t * s.a_t + s.a_r * s.a_r
    if np.ndim(a1p) == 0:
        return MzOutputs(complex(a1p), complex(a2p))
    return MzOutputs(a1p, a2p)


def output_phase_difference(o: MzOutputs) -> float:
    """Arg(a2p conj(a1p)); raises UndefinedPhaseError when an output is dark."""
    return relative_phase_strict(o.a2p, o.a1p, "MZ output phase difference")


def mz_phase_static(o: MzOutputs, s: SplitResult | None = None) -> float:
    """Phase difference between the destructive and constructive outputs.

    Equal to +-pi/2 for a lossless, unbalanced slab. Undefined for a
    balanced slab, where the destructive port is dark. ``s`` is accepted for
    symmetry with the single-beamsplitter call and is not needed.
    """
    return output_phase_difference(o)


def mz_phase_opd(s: SplitResult, k_delta: float) -> float:
    """Output phase difference under path modulation; 0 or pi for a balanced slab.

    The phase jumps where either output goes dark, and is undefined there.
    """
    return output_phase_difference(mz_opd(s, float(k_delta)))


def mz_quantum_matrix(
    k_delta: float, variant: Literal["eq3a", "eq3b"] = "eq3a"
) -> np.ndarray:
    """BS @ D(k_delta) @ BS in raw component order (second row is port 1')."""
    bs = quantum_bs_matrix(variant)
    return bs @ delay_matrix(k_delta) @ bs


def mz_quantum(
    k_delta: float,
    input_amplitudes=(1.0, 0.0),
    variant: Literal["eq3a", "eq3b"] = "eq3a",
) -> MzOutputs:
    """Matrix-product interferometer acting on a normalized input pair.

    For input (1, 0): I1' = cos^2(k_delta/2), I2' = sin^2(k_delta/2).
    """
    vec = np.asarray(input_amplitudes, dtype=complex)
    if vec.shape != (2,):
        raise DomainError("input must be a pair of amplitudes")
    norm = float(np.sum(np.abs(vec) ** 2))
    if abs(norm - 1.0) > 1e-9:
        raise NormalizationError(f"input intensities sum to {norm}, expected 1")
    out = mz_quantum_matrix(float(k_delta), variant) @ vec
    return MzOutputs(complex(out[1]), complex(out[0]))


MZ_COLUMNS = ("x", "i1", "i2", "phi1", "phi2", "phase_diff", "energy")


def mz_sweep(
    mode: Literal["internal_phase", "opd"],
    c: InterfaceCoefficients,
    grid,
    phi: float | None = None,
) -> SweepSeries:
    """Interferometer outputs over a grid of internal phase or path difference.

    ``internal_phase`` sweeps the common internal phase of both slabs at zero
    path difference. ``opd`` sweeps k_delta at fixed internal phase ``phi``,
    which defaults to the first balance phase of ``c``.

    Rows are (x, I1', I2', Arg a1p, Arg a2p, Arg(a2p conj a1p), I1' + I2');
    phase columns are NaN where the relevant output is dark.
    """
    x = np.asarray(grid, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise DomainError("grid must be a nonempty 1-D sequence")
    if mode == "internal_phase":
        o = mz_static(fp_split(c, x))
    elif mode == "opd":
        if phi is None:
            phi = balance_phases(c)[0]
        o = mz_opd(fp_split(c, float(phi)), x)
    else:
        raise DomainError(f"mode must be 'internal_phase' or 'opd', got {mode!r}")
    a1p = np.broadcast_to(o.a1p, x.shape)
    a2p = np.broadcast_to(o.a2p, x.shape)
    i1, i2 = np.abs(a1p) ** 2, np.abs(a2p) ** 2
    return SweepSeries(
        MZ_COLUMNS,
        np.column_stack([
            x, i1, i2,
            amplitude_phase(a1p), amplitude_phase(a2p), relative_phase(a2p, a1p),
            i1 + i2,
        ]),
    )

