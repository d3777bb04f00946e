"""Small numerical helpers: the ``NUM`` literal grammar, relative phases and
2x2 matrix checks.

Numbers in circuit files and on the command line share one grammar: a decimal
float with optional exponent and an optional trailing ``pi`` multiplier, so
``0.115pi`` and ``2pi`` read naturally next to phases quoted in units of pi.
"""

from __future__ import annotations

import math
import re

import numpy as np

from .errors import UndefinedPhaseError

# Moduli at or below this are treated as a vanishing amplitude.
ZERO_AMPLITUDE = 1e-12

NUM_PATTERN = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:pi)?"
_NUM_RE = re.compile(NUM_PATTERN)


def parse_number(text: str) -> float:
    """Parse a ``NUM`` literal such as ``1.5``, ``-3e-2`` or ``0.115pi``.

    Raises ValueError on anything else, including ``nan`` and ``inf``.
    """
    token = text.strip()
    if not _NUM_RE.fullmatch(token):
        raise ValueError(f"malformed number {text!r}")
    if token.endswith("pi"):
        return float(token[:-2]) * math.pi
    return float(token)


def format_number(x: float) -> str:
    """Serialize a float with 17 significant digits (round-trip exact)."""
    if math.isnan(x):
        return "nan"
    return format(float(x), ".17g")


def relative_phase(a, b):
    """Arg(a * conj(b)) in (-pi, pi], NaN wherever |a| or |b| vanishes.

    Works on scalars and arrays; callers that need an exception on the
    undefined case use :func:`relative_phase_strict`.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    out = np.angle(a * np.conj(b))
    undefined = (np.abs(a) <= ZERO_AMPLITUDE) | (np.abs(b) <= ZERO_AMPLITUDE)
    out = np.where(undefined, np.nan, out)
    # np.angle returns -pi on the negative real axis with a -0.0 imaginary part
    out = np.where(out == -np.pi, np.pi, out)
    return out[()] if out.ndim == 0 else out


def relative_phase_strict(a: complex, b: complex, what: str = "phase") -> float:
    value = float(relative_phase(a, b))
    if math.isnan(value):
        raise UndefinedPhaseError(f"{what} is undefined: one of the amplitudes vanishes")
    return value


def amplitude_phase(a):
    """Arg(a), NaN where the amplitude vanishes."""
    return relative_phase(a, np.ones_like(np.asarray(a, dtype=complex)))


def unitarity_residual(m: np.ndarray) -> float:
    """Largest entry modulus of M M^dagger - I."""
    m = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0]))))


def is_unitary(m: np.ndarray, tol: float = 1e-12) -> bool:
    return unitarity_residual(m) <= tol
