"""Classical wave model of coincidence counting behind a balanced beamsplitter.

A balanced lossless splitter sends A0/sqrt(2) to one detector and
i A0/sqrt(2) to the other. Averaging the product of the two amplitudes over a
spectral band of width dk = 2 pi / (c tau_c) gives an instantaneous
correlation

    C(t) = (i/2) exp(-2 i Omega t) sinc(dk c t),     Omega = k c

(A0 = 1, time origin centred between the detectors). Integrating its squared
real part over a window of half-width tau gives the recorded correlation

    C_RT = 1/(2 tau) int_{-tau}^{tau} sin^2(2 Omega t) sinc^2(dk c t) dt.

Replacing sinc^2 by a unit step on [-tau_c, tau_c] with tau = 2 tau_c gives
the closed form C = (1 - sinc(2 Omega tau)) / 4, which vanishes as tau -> 0.
:func:`correlation_numeric` evaluates the integral by quadrature, with either
the step or the true sinc^2 weight, as an independent check of the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.integrate import simpson

from .errors import DomainError
from .series import SweepSeries

SPEED_OF_LIGHT = 299_792_458.0  # m/s, exact
# Fitted so that 2 Omega tau = pi at tau ~ 5.5 ns; a model choice, not a measured constant.
DEFAULT_OMEGA = 2.856e8
MIN_QUAD_POINTS = 64

Kernel = Literal["step", "sinc2"]


def sinc(u):
    """sin(u)/u with sinc(0) = 1. Accepts scalars and arrays."""
    u = np.asarray(u, dtype=float)
    safe = np.where(u == 0.0, 1.0, u)
    out = np.where(u == 0.0, 1.0, np.sin(safe) / safe)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class CoincidenceParams:
    """Parameters of the correlation model.

    omega : angular rate k c in rad/s
    tau_c : coherence time in s
    tau : half-width of the integration window in s; defaults to 2 tau_c
    """

    omega: float
    tau_c: float
    tau: float | None = None

    def __post_init__(self):
        if self.tau is None:
            object.__setattr__(self, "tau", 2.0 * self.tau_c)
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise DomainError(f"omega must be positive, got {self.omega}")
        if not (math.isfinite(self.tau_c) and self.tau_c > 0.0):
            raise DomainError(f"tau_c must be positive, got {self.tau_c}")
        if not (math.isfinite(self.tau) and self.tau >= 0.0):
            raise DomainError(f"tau must be non-negative, got {self.tau}")

    @property
    def delta_k_rate(self) -> float:
        """Spectral-width rate dk c = 2 pi / tau_c, in rad/s."""
        return 2.0 * math.pi / self.tau_c

    @property
    def coherence_length(self) -> float:
        return SPEED_OF_LIGHT * self.tau_c


def instantaneous_correlation(p: CoincidenceParams, t):
    """(i/2) exp(-2 i omega t) sinc(dk c t) at time(s) ``t``."""
    t = np.asarray(t, dtype=float)
    out = 0.5j * np.exp(-2j * p.omega * t) * sinc(p.delta_k_rate * t)
    return complex(out) if out.ndim == 0 else out


def correlation_analytic(p: CoincidenceParams) -> float:
    """Closed-form correlation factor (1 - sinc(2 omega tau)) / 4."""
    return (1.0 - sinc(2.0 * p.omega * p.tau)) / 4.0


def correlation_numeric(
    p: CoincidenceParams, kernel: Kernel = "sinc2", quad_points: int = 10_000
) -> float:
    """Window-averaged correlation by composite Simpson quadrature.

    kernel="step" weights sin^2(2 omega t) by 1 on [-tau_c, tau_c] (the
    interval is clipped exactly at the step edges); kernel="sinc2" uses the
    full sinc^2(dk c t) weight over [-tau, tau].
    """
    if quad_points < MIN_QUAD_POINTS:
        raise DomainError(f"quad_points must be >= {MIN_QUAD_POINTS}, got {quad_points}")
    tau = p.tau
    if tau == 0.0:
        return 0.0
    if kernel == "step":
        half = min(tau, p.tau_c)
        t = np.linspace(-half, half, quad_points)
        y = np.sin(2.0 * p.omega * t) ** 2
    elif kernel == "sinc2":
        t = np.linspace(-tau, tau, quad_points)
        y = np.sin(2.0 * p.omega * t) ** 2 * sinc(p.delta_k_rate * t) ** 2
    else:
        raise DomainError(f"unknown kernel {kernel!r}")
    return float(simpson(y, x=t)) / (2.0 * tau)


def output_intensities(p: CoincidenceParams) -> tuple[float, float]:
    """Window-dependent singles (I_T, I_R) = ((1 + sinc(omega tau))/2, (1 - sinc(omega tau))/2)."""
    s = sinc(p.omega * p.tau)
    return (1.0 + s) / 2.0, (1.0 - s) / 2.0


def normalized_correlation(c_rt: float, i_t: float, i_r: float) -> float:
    """C = C_RT / (I_T + I_R)."""
    total = i_t + i_r
    if total == 0.0:
        raise ZeroDivisionError("normalized correlation needs nonzero singles intensity")
    return c_rt / total


@dataclass(frozen=True)
class CorrelationCurve:
    tau: np.ndarray
    c_norm: np.ndarray
    i_t: np.ndarray
    i_r: np.ndarray

    def __len__(self) -> int:
        return len(self.tau)

    def to_series(self) -> SweepSeries:
        return SweepSeries(
            ("tau", "c", "i_t", "i_r"),
            np.column_stack([self.tau, self.c_norm, self.i_t, self.i_r]),
        )


def hbt_sweep(
    omega: float,
    tau_grid,
    kernel: Literal["analytic", "step", "sinc2"] = "analytic",
    tau_c: float | None = None,
    quad_points: int = 10_000,
) -> CorrelationCurve:
    """Correlation factor and singles over a grid of window half-widths.

    With ``tau_c=None`` every row uses tau_c = tau / 2, the regime in which the
    closed form holds; a number fixes the coherence time for all rows
    instead. The analytic kernel ignores ``tau_c``.
    """
    taus = np.asarray(tau_grid, dtype=float)
    if taus.ndim != 1 or taus.size == 0:
        raise DomainError("tau grid must be a nonempty 1-D sequence")
    if np.any(taus < 0.0):
        raise DomainError("tau grid values must be non-negative")
    if kernel not in ("analytic", "step", "sinc2"):
        raise DomainError(f"unknown kernel {kernel!r}")
    c = np.empty_like(taus)
    i_t = np.empty_like(taus)
    i_r = np.empty_like(taus)
    for j, tau in enumerate(taus):
        if tau == 0.0:
            # zero-width window: perfect anticorrelation, all light transmitted
            c[j], i_t[j], i_r[j] = 0.0, 1.0, 0.0
            continue
        p = CoincidenceParams(omega, tau / 2.0 if tau_c is None else tau_c, tau)
        i_t[j], i_r[j] = output_intensities(p)
        if kernel == "analytic":
            c_rt = correlation_analytic(p)
        else:
            c_rt = correlation_numeric(p, kernel, quad_points)
        c[j] = normalized_correlation(c_rt, i_t[j], i_r[j])
    return CorrelationCurve(taus, c, i_t, i_r)
