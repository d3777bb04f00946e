"""Fabry-Perot model of a symmetric plane-parallel slab beamsplitter.

A glass plate in air splits an incident amplitude (normalized to 1, entering
port 1) into a transmitted amplitude ``a_t`` and a reflected amplitude ``a_r``.
Both are geometric sums over the internal reflections between the two faces:

    a_t = t12 t21 exp(i phi) / (1 - r21^2 exp(2 i phi))
    a_r = (r12 + r21 (t12 t21 - r12 r21) exp(2 i phi)) / (1 - r21^2 exp(2 i phi))

with ``phi`` the phase accumulated in one crossing of the plate. The
transmitted amplitude keeps its ``exp(i phi)`` factor, i.e. both outputs are
referenced to the entrance point. Dropping it shifts the relative phase and
hides the quadrature between the two outputs.

For a lossless interface (r21 = -r12, t12 t21 - r12 r21 = 1) the outputs are
always in quadrature, Arg(a_r conj(a_t)) = +-pi/2, whatever phi is.

The black-box 2x2 matrices of the quantum description are provided alongside
for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DomainError, NoSolutionError
from .numeric import relative_phase, relative_phase_strict
from .series import SweepSeries

TWO_PI = 2.0 * math.pi
LOSSLESS_TOL = 1e-12


@dataclass(frozen=True)
class InterfaceCoefficients:
    """Real Fresnel amplitude factors of the two slab faces.

    Attributes
    ----------
    t12 : float
        Air to glass transmission.
    t21 : float
        Glass to air transmission.
    r12 : float
        External (air side) reflection.
    r21 : float
        Internal (glass side) reflection; ``|r21| < 1`` so the multiple-beam
        series converges.
    """

    t12: float
    t21: float
    r12: float
    r21: float

    def __post_init__(self):
        values = (self.t12, self.t21, self.r12, self.r21)
        if not all(math.isfinite(v) for v in values):
            raise DomainError(f"interface coefficients must be finite, got {values}")
        if abs(self.r21) >= 1.0:
            raise DomainError(f"|r21| must be < 1, got r21={self.r21}")

    @property
    def tt(self) -> float:
        """Transmission product t12 t21."""
        return self.t12 * self.t21

    @property
    def rr(self) -> float:
        """Reflection product -r12 r21 (positive for the usual sign pair)."""
        return -self.r12 * self.r21

    @property
    def absorption(self) -> float:
        """Interface absorption budget 1 - (t12 t21 - r12 r21)."""
        return 1.0 - (self.tt + self.rr)

    @property
    def is_lossless(self) -> bool:
        tol = LOSSLESS_TOL
        return (
            abs(self.r21 + self.r12) <= tol
            and abs(self.tt - self.r12 * self.r21 - 1.0) <= tol
            and abs(self.t12**2 + self.r12**2 - 1.0) <= tol
            and abs(self.t21**2 + self.r21**2 - 1.0) <= tol
        )


@dataclass(frozen=True)
class SplitResult:
    """Transmitted and reflected amplitudes for unit input in port 1.

    Fields may be complex scalars or complex arrays (one entry per phase).
    """

    a_t: complex | np.ndarray
    a_r: complex | np.ndarray

    @property
    def i_t(self):
        return np.abs(self.a_t) ** 2

    @property
    def i_r(self):
        return np.abs(self.a_r) ** 2

    @property
    def energy(self):
        return self.i_t + self.i_r


def lossless_interface(r: float) -> InterfaceCoefficients:
    """Lossless interface with external reflectivity ``r`` in (0, 1).

    The four lossless identities only admit t12 = t21 = sqrt(1 - r^2), with
    r12 = r and r21 = -r.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"reflectivity must lie in (0, 1), got {r}")
    t = math.sqrt(1.0 - r * r)
    return InterfaceCoefficients(t12=t, t21=t, r12=r, r21=-r)


def absorbing_interface(tt: float, rr: float) -> InterfaceCoefficients:
    """Symmetric interface from the products ``tt = t12 t21`` and ``rr = -r12 r21``.

    ``tt + rr = 1`` is the lossless boundary; ``tt + rr < 1`` absorbs.
    """
    if tt <= 0.0 or rr <= 0.0:
        raise DomainError(f"tt and rr must be positive, got tt={tt}, rr={rr}")
    if tt + rr > 1.0 + LOSSLESS_TOL:
        raise DomainError(f"tt + rr = {tt + rr} > 1 describes a gain medium")
    if rr >= 1.0:
        raise DomainError(f"rr must be < 1, got {rr}")
    t = math.sqrt(tt)
    r = math.sqrt(rr)
    return InterfaceCoefficients(t12=t, t21=t, r12=r, r21=-r)


def internal_phase(n: float, e: float, theta: float, k: float) -> float:
    """Single-crossing phase k n e cos(theta) of a plate of index n, thickness e.

    ``k`` is the vacuum wavenumber in rad/m, ``theta`` the internal angle.
    """
    if e <= 0.0 or k <= 0.0:
        raise DomainError(f"thickness and wavenumber must be positive, got e={e}, k={k}")
    if n <= 1.0:
        raise DomainError(f"refractive index must exceed 1, got n={n}")
    if not abs(theta) < math.pi / 2:
        raise DomainError(f"internal angle must satisfy |theta| < pi/2, got {theta}")
    return k * n * e * math.cos(theta)


def _reflected_general(c: InterfaceCoefficients, phi):
    e2 = np.exp(2j * np.asarray(phi, dtype=float))
    return (c.r12 + c.r21 * (c.tt - c.r12 * c.r21) * e2) / (1.0 - c.r21**2 * e2)


def fp_split(c: InterfaceCoefficients, phi) -> SplitResult:
    """Transmitted and reflected amplitudes of the slab at internal phase ``phi``.

    ``phi`` may be a scalar or an array. For lossless coefficients the
    reflected branch is evaluated as 2i r21 sin(phi) exp(i phi) / den, which
    is the same quantity as -r21 (1 - exp(2i phi)) / den without the
    cancellation near phi = 0 (mod pi).
    """
    phi = np.asarray(phi, dtype=float)
    e1 = np.exp(1j * phi)
    den = 1.0 - c.r21**2 * e1 * e1
    a_t = c.tt * e1 / den
    if c.is_lossless:
        a_r = 2j * c.r21 * np.sin(phi) * e1 / den
    else:
        a_r = _reflected_general(c, phi)
    if phi.ndim == 0:
        return SplitResult(complex(a_t), complex(a_r))
    return SplitResult(a_t, a_r)


def quadrature_phase(s: SplitResult) -> float:
    """Arg(a_r conj(a_t)) in (-pi, pi].

    Raises UndefinedPhaseError when either output vanishes (lossless slab at
    phi = 0 mod pi).
    """
    return relative_phase_strict(s.a_r, s.a_t, "reflected/transmitted phase")


def slab_matrix(c: InterfaceCoefficients, phi: float) -> np.ndarray:
    """Two-port matrix of the symmetric slab for any coefficients.

    The slab is the same seen from either side, so port 2 input gives the
    mirror image of port 1 input.
    """
    s = fp_split(c, float(phi))
    return np.array([[s.a_t, s.a_r], [s.a_r, s.a_t]], dtype=complex)


def classical_bs_matrix(c: InterfaceCoefficients, phi: float) -> np.ndarray:
    """Beamsplitter matrix of a lossless slab written in black-box form.

    Common factor exp(i phi) / (1 - r21^2 exp(2 i phi)) times
    [[t12 t21, 2i r21 sin phi], [2i r21 sin phi, t12 t21]].
    Output column (port 1', port 2') = M @ (port 1, port 2).
    """
    if not c.is_lossless:
        raise DomainError("classical_bs_matrix requires lossless coefficients")
    phi = float(phi)
    e1 = np.exp(1j * phi)
    factor = e1 / (1.0 - c.r21**2 * e1 * e1)
    off = 2j * c.r21 * math.sin(phi)
    return factor * np.array([[c.tt, off], [off, c.tt]], dtype=complex)


def quantum_bs_matrix(variant: Literal["eq3a", "eq3b"] = "eq3a", phi0: float = 0.0) -> np.ndarray:
    """Black-box lossless beamsplitter matrices.

    ``eq3a``: exp(i phi0)/sqrt(2) [[i, 1], [1, i]], the pi/2 shift on transmission.
    ``eq3b``: 1/sqrt(2) [[1, 1], [-1, 1]], the real form suited to half-silvered
    mirrors. ``phi0`` only applies to ``eq3a``.
    """
    if variant == "eq3a":
        return np.exp(1j * phi0) / math.sqrt(2.0) * np.array([[1j, 1.0], [1.0, 1j]], dtype=complex)
    if variant == "eq3b":
        return np.array([[1.0, 1.0], [-1.0, 1.0]], dtype=complex) / math.sqrt(2.0)
    raise DomainError(f"unknown quantum beamsplitter variant {variant!r}")


def balance_phases(c: InterfaceCoefficients) -> list[float]:
    """All internal phases in [0, 2 pi) giving a 50/50 intensity split.

    From sin(phi) = +-t12 t21 / (2 r21) the principal root phi0 generates
    phi0, pi - phi0, pi + phi0 and 2 pi - phi0. Each root is checked against
    :func:`fp_split`.
    """
    if not c.is_lossless:
        raise DomainError("balance_phases requires lossless coefficients")
    arg = c.tt / (2.0 * c.r21)
    if abs(arg) > 1.0:
        raise NoSolutionError(
            f"no 50/50 phase exists: |t12 t21 / (2 r21)| = {abs(arg):.6g} > 1"
        )
    base = math.asin(abs(arg))
    roots: list[float] = []
    for candidate in (base, math.pi - base, math.pi + base, TWO_PI - base):
        candidate %= TWO_PI
        if not any(abs(candidate - r) < 1e-12 for r in roots):
            roots.append(candidate)
    roots.sort()
    for phi in roots:
        residual = abs(fp_split(c, phi).i_t - 0.5)
        if residual >= 1e-9:
            raise ArithmeticError(f"balance root {phi} failed verification, residual {residual}")
    return roots


BS_COLUMNS = ("phi", "i_t", "i_r", "phase_diff", "energy")


def bs_sweep(c: InterfaceCoefficients, phi_grid) -> SweepSeries:
    """Rows (phi, I_T, I_R, Arg(a_r conj a_t), I_T + I_R) over ``phi_grid``.

    The phase column is NaN where an output vanishes.
    """
    phi = np.asarray(phi_grid, dtype=float)
    if phi.ndim != 1 or phi.size == 0:
        raise DomainError("phi grid must be a nonempty 1-D sequence")
    s = fp_split(c, phi)
    i_t, i_r = s.i_t, s.i_r
    return SweepSeries(
        BS_COLUMNS,
        np.column_stack([phi, i_t, i_r, relative_phase(s.a_r, s.a_t), i_t + i_r]),
    )
