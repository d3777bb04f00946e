"""A line-oriented description language for chains of two-port elements.

Example::

    # symmetric Mach-Zehnder, balanced slabs
    CIRCUIT mz
      BS lossless r=0.7071067811865476 phi=0.11502pi
      DELAY k_delta=0.5pi
      BS lossless r=0.7071067811865476 phi=0.11502pi
    END

Elements are listed in the order the light meets them. :func:`compile_circuit`
multiplies their matrices right to left, so the first element is the
rightmost factor: M = M_n @ ... @ M_2 @ M_1.

Element matrices act on the column (port 1, port 2):

* ``BS lossless r=R phi=PHI`` -- lossless slab in black-box form
* ``BS absorbing tt=TT rr=RR phi=PHI`` -- absorbing symmetric slab
* ``BS quantum eq3a|eq3b`` -- ideal black-box splitter
* ``DELAY k_delta=X`` -- diag(exp(i X), 1)
* ``PHASE port=1|2 theta=X`` -- exp(i X) on the named port
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import BeamsplitError, DomainError
from .interferometer import delay_matrix
from .numeric import parse_number
from .slab import (
    absorbing_interface,
    classical_bs_matrix,
    lossless_interface,
    quantum_bs_matrix,
    slab_matrix,
)

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.-]*")
_TOKEN_RE = re.compile(r"\S+")


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int
    length: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


@dataclass(frozen=True)
class Diagnostic:
    kind: str  # syntax | duplicate-parameter | unknown-element | domain
    message: str
    span: SourceSpan

    def __str__(self) -> str:
        return f"{self.span}: {self.kind} error: {self.message}"


class CircuitParseError(BeamsplitError, ValueError):
    """Raised with every diagnostic found in a circuit source."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


# Spans are excluded from equality so that rendered and reparsed ASTs compare equal.


@dataclass(frozen=True)
class BS:
    kind: str  # lossless | absorbing | quantum
    phi: float | None = None
    r: float | None = None
    tt: float | None = None
    rr: float | None = None
    variant: str | None = None
    span: SourceSpan | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Delay:
    k_delta: float
    span: SourceSpan | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Phase:
    port: int
    theta: float
    span: SourceSpan | None = field(default=None, compare=False, repr=False)


Element = Union[BS, Delay, Phase]


@dataclass(frozen=True)
class CircuitAst:
    name: str
    elements: tuple[Element, ...]
    span: SourceSpan | None = field(default=None, compare=False, repr=False)


class _LineError(Exception):
    def __init__(self, kind: str, message: str, column: int, length: int):
        super().__init__(message)
        self.kind, self.message, self.column, self.length = kind, message, column, length


_BS_PARAMS = {
    "lossless": ("r", "phi"),
    "absorbing": ("tt", "rr", "phi"),
}


def _tokens(text: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns."""
    return [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(text)]


def _params(tokens, expected: tuple[str, ...], element: str) -> dict[str, float]:
    values: dict[str, float] = {}
    for tok, col in tokens:
        key, eq, raw = tok.partition("=")
        if not eq:
            raise _LineError("syntax", f"expected key=value, got {tok!r}", col, len(tok))
        if key not in expected:
            raise _LineError("syntax", f"unknown parameter {key!r} for {element}", col, len(key))
        if key in values:
            raise _LineError("duplicate-parameter", f"parameter {key!r} given twice", col, len(key))
        try:
            values[key] = parse_number(raw)
        except ValueError:
            raise _LineError("syntax", f"malformed number {raw!r} for {key!r}", col + len(key) + 1, max(len(raw), 1))
    return values


def _require(values: dict, expected: tuple[str, ...], element: str, col: int, length: int) -> None:
    missing = [k for k in expected if k not in values]
    if missing:
        raise _LineError("syntax", f"{element} is missing {', '.join(missing)}", col, length)


def _parse_element(tokens, lineno: int) -> Element:
    head, col = tokens[0]
    span = SourceSpan(lineno, col, len(head))
    rest = tokens[1:]
    if head == "BS":
        if not rest:
            raise _LineError("syntax", "BS needs a source: lossless, absorbing or quantum", col, len(head))
        kind, kcol = rest[0]
        if kind == "quantum":
            if len(rest) != 2:
                raise _LineError("syntax", "BS quantum takes exactly one variant, eq3a or eq3b", kcol, len(kind))
            variant, vcol = rest[1]
            if variant not in ("eq3a", "eq3b"):
                raise _LineError("syntax", f"unknown quantum variant {variant!r}", vcol, len(variant))
            return BS("quantum", variant=variant, span=span)
        if kind not in _BS_PARAMS:
            raise _LineError("syntax", f"unknown BS source {kind!r}", kcol, len(kind))
        expected = _BS_PARAMS[kind]
        values = _params(rest[1:], expected, f"BS {kind}")
        # a bad r is reported even when other parameters are missing
        if kind == "lossless" and "r" in values and not 0.0 < values["r"] < 1.0:
            pcol = next(c for t, c in rest if t.startswith("r="))
            raise _LineError("domain", f"r={values['r']!r} outside (0, 1)", pcol, len("r="))
        _require(values, expected, f"BS {kind}", col, len(head))
        if kind == "absorbing":
            try:
                absorbing_interface(values["tt"], values["rr"])
            except DomainError as exc:
                raise _LineError("domain", str(exc), kcol, len(kind))
        return BS(kind, span=span, **values)
    if head == "DELAY":
        values = _params(rest, ("k_delta",), "DELAY")
        _require(values, ("k_delta",), "DELAY", col, len(head))
        return Delay(values["k_delta"], span=span)
    if head == "PHASE":
        values = _params(rest, ("port", "theta"), "PHASE")
        _require(values, ("port", "theta"), "PHASE", col, len(head))
        port_tok = next((t, c) for t, c in rest if t.startswith("port="))
        if port_tok[0] not in ("port=1", "port=2"):
            raise _LineError("domain", f"port must be 1 or 2, got {port_tok[0][5:]!r}", port_tok[1], len(port_tok[0]))
        return Phase(int(values["port"]), values["theta"], span=span)
    raise _LineError("unknown-element", f"unknown element {head!r}", col, len(head))


def parse_file(source: str) -> list[CircuitAst]:
    """Parse every circuit in ``source``.

    Raises CircuitParseError carrying all diagnostics; no partial result is
    returned when any line is in error.
    """
    diagnostics: list[Diagnostic] = []
    circuits: list[CircuitAst] = []
    current: tuple[str, SourceSpan, list[Element]] | None = None
    body_errors = False

    def err(kind, message, lineno, col, length):
        diagnostics.append(Diagnostic(kind, message, SourceSpan(lineno, col, length)))

    lines = source.split("\n")
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].rstrip("\r")
        tokens = _tokens(text)
        if not tokens:
            continue
        head, col = tokens[0]
        if current is None:
            if head != "CIRCUIT":
                err("syntax", f"expected CIRCUIT, got {head!r}", lineno, col, len(head))
                continue
            if len(tokens) != 2 or not _IDENT_RE.fullmatch(tokens[1][0]):
                if len(tokens) == 1:
                    bad = tokens[0]
                elif _IDENT_RE.fullmatch(tokens[1][0]):
                    bad = tokens[2]
                else:
                    bad = tokens[1]
                err("syntax", "CIRCUIT needs exactly one identifier", lineno, bad[1], len(bad[0]))
                # still open a block so the body is checked
                current = ("?", SourceSpan(lineno, col, len(head)), [])
                continue
            current = (tokens[1][0], SourceSpan(lineno, col, len(head)), [])
            continue
        if head == "END":
            if len(tokens) > 1:
                err("syntax", f"unexpected {tokens[1][0]!r} after END", lineno, tokens[1][1], len(tokens[1][0]))
            name, span, elements = current
            if not elements and not body_errors:
                err("syntax", f"circuit {name!r} has no elements", span.line, span.column, span.length)
            else:
                circuits.append(CircuitAst(name, tuple(elements), span))
            current = None
            body_errors = False
            continue
        if head == "CIRCUIT":
            err("syntax", "CIRCUIT inside a circuit; missing END", lineno, col, len(head))
            continue
        try:
            current[2].append(_parse_element(tokens, lineno))
        except _LineError as exc:
            body_errors = True
            err(exc.kind, exc.message, lineno, exc.column, exc.length)
    if current is not None:
        span = current[1]
        err("syntax", f"circuit {current[0]!r} is missing END", span.line, span.column, span.length)
    if diagnostics:
        raise CircuitParseError(diagnostics)
    return circuits


def parse(source: str) -> CircuitAst:
    """Parse a source holding exactly one circuit."""
    circuits = parse_file(source)
    if len(circuits) != 1:
        raise CircuitParseError(
            [Diagnostic("syntax", f"expected exactly one circuit, found {len(circuits)}", SourceSpan(1, 1, 0))]
        )
    return circuits[0]


def _num(x: float) -> str:
    return repr(float(x))


def render_element(e: Element) -> str:
    if isinstance(e, BS):
        if e.kind == "quantum":
            return f"BS quantum {e.variant}"
        if e.kind == "lossless":
            return f"BS lossless r={_num(e.r)} phi={_num(e.phi)}"
        return f"BS absorbing tt={_num(e.tt)} rr={_num(e.rr)} phi={_num(e.phi)}"
    if isinstance(e, Delay):
        return f"DELAY k_delta={_num(e.k_delta)}"
    return f"PHASE port={e.port} theta={_num(e.theta)}"


def render(ast: CircuitAst) -> str:
    """Canonical text of a circuit; reparsing it gives an equal AST."""
    body = "".join(f"  {render_element(e)}\n" for e in ast.elements)
    return f"CIRCUIT {ast.name}\n{body}END\n"


def element_matrix(e: Element, require_lossless: bool = False) -> np.ndarray:
    if isinstance(e, BS):
        if e.kind == "quantum":
            return quantum_bs_matrix(e.variant)
        if e.kind == "lossless":
            return classical_bs_matrix(lossless_interface(e.r), e.phi)
        coeffs = absorbing_interface(e.tt, e.rr)
        if require_lossless and not coeffs.is_lossless:
            where = f" (line {e.span.line})" if e.span else ""
            raise DomainError(f"absorbing beamsplitter in a lossless-only circuit{where}")
        if coeffs.is_lossless:
            return classical_bs_matrix(coeffs, e.phi)
        return slab_matrix(coeffs, e.phi)
    if isinstance(e, Delay):
        return delay_matrix(e.k_delta)
    if isinstance(e, Phase):
        m = np.eye(2, dtype=complex)
        m[e.port - 1, e.port - 1] = np.exp(1j * e.theta)
        return m
    raise TypeError(f"not a circuit element: {e!r}")


def compile_circuit(ast: CircuitAst, require_lossless: bool = False) -> np.ndarray:
    """Single 2x2 matrix of the whole chain, last element leftmost."""
    m = np.eye(2, dtype=complex)
    for e in ast.elements:
        m = element_matrix(e, require_lossless) @ m
    return m


@dataclass(frozen=True)
class Evaluation:
    amplitudes: tuple[complex, complex]
    input_norm: float

    @property
    def intensities(self) -> tuple[float, float]:
        return (abs(self.amplitudes[0]) ** 2, abs(self.amplitudes[1]) ** 2)

    @property
    def output_norm(self) -> float:
        return sum(self.intensities)


def evaluate(m: np.ndarray, input_amplitudes) -> Evaluation:
    """Apply a two-port matrix to an input pair; no normalization is imposed."""
    vec = np.asarray(input_amplitudes, dtype=complex)
    if vec.shape != (2,):
        raise DomainError("input must be a pair of amplitudes")
    out = np.asarray(m, dtype=complex) @ vec
    return Evaluation((complex(out[0]), complex(out[1])), float(np.sum(np.abs(vec) ** 2)))
