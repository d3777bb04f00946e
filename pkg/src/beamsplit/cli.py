"""Command-line front end: sweeps and circuit evaluation as deterministic CSV/text.

Exit codes: 0 success, 2 usage or parse error, 3 no balance phase.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import re
import sys
from pathlib import Path
from typing import TextIO

import numpy as np

from . import coincidence, interferometer, slab
from .circuit import CircuitParseError, compile_circuit, evaluate, parse_file
from .errors import BeamsplitError, NoSolutionError
from .numeric import format_number, parse_number, unitarity_residual

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_SOLUTION = 3

_MISSING = object()


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports flag errors on a single line."""

    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _num(text: str) -> float:
    try:
        return parse_number(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed number {text!r}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _tau_c(text: str):
    if text == "coupled":
        return None
    value = _num(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"--tau-c must be positive or 'coupled', got {text!r}")
    return value


_COMPLEX_RE = re.compile(r"\s*([^,]+?)\s*,\s*([^,]+?)\s*")


def _complex(text: str) -> complex:
    t = text.replace(" ", "")
    if t.endswith("i"):
        t = t[:-1] + "j"
        if t in ("j", "+j", "-j") or t[-2] in "+-":
            t = t[:-1] + "1j"
    value = complex(t)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError(text)
    return value


def parse_input_pair(text: str) -> tuple[complex, complex]:
    """Parse ``"re1+im1i,re2+im2i"`` into two complex amplitudes."""
    m = _COMPLEX_RE.fullmatch(text)
    if not m:
        raise ValueError(f"expected two comma-separated amplitudes, got {text!r}")
    try:
        return _complex(m.group(1)), _complex(m.group(2))
    except ValueError:
        raise ValueError(f"malformed complex amplitude in {text!r}")


def _interface(args) -> slab.InterfaceCoefficients:
    if args.r is not None:
        if args.tt is not None or args.rr is not None:
            raise UsageError("give either --r or --tt/--rr, not both")
        return slab.lossless_interface(args.r)
    if args.tt is None or args.rr is None:
        raise UsageError("give --r, or both --tt and --rr")
    return slab.absorbing_interface(args.tt, args.rr)


def _grid(lo: float, hi: float, steps: int) -> np.ndarray:
    return np.linspace(lo, hi, steps)


def run_bs_sweep(args, out: TextIO) -> int:
    c = _interface(args)
    series = slab.bs_sweep(c, _grid(args.phi_min, args.phi_max, args.steps))
    series.write_csv(out)
    return EXIT_OK


def run_mz_sweep(args, out: TextIO) -> int:
    c = _interface(args)
    mode = args.mode.replace("-", "_")
    phi = args.phi
    if mode == "opd" and phi is None:
        if not c.is_lossless:
            raise UsageError("--phi is required in opd mode for an absorbing beamsplitter")
        phi = slab.balance_phases(c)[0]
    series = interferometer.mz_sweep(mode, c, _grid(args.x_min, args.x_max, args.steps), phi=phi)
    series.write_csv(out)
    return EXIT_OK


def run_hbt(args, out: TextIO) -> int:
    if args.kernel != "analytic" and args.tau_c is _MISSING:
        raise UsageError(f"--tau-c is required with --kernel {args.kernel}")
    tau_c = None if args.tau_c is _MISSING else args.tau_c
    if args.tau_max < args.tau_min or args.tau_min < 0:
        raise UsageError("need 0 <= --tau-min <= --tau-max")
    curve = coincidence.hbt_sweep(
        args.omega, _grid(args.tau_min, args.tau_max, args.steps), args.kernel,
        tau_c=tau_c, quad_points=args.quad_points,
    )
    curve.to_series().write_csv(out)
    return EXIT_OK


def run_balance(args, out: TextIO) -> int:
    c = slab.lossless_interface(args.r)
    roots = slab.balance_phases(c)
    out.write("phi_rad,phi_over_pi,residual\n")
    for phi in roots:
        residual = abs(float(slab.fp_split(c, phi).i_t) - 0.5)
        out.write(f"{format_number(phi)},{phi / math.pi:.5g},{residual:.3e}\n")
    return EXIT_OK


def _fmt_complex(z: complex) -> str:
    return f"{format_number(z.real)}{'+' if z.imag >= 0 or math.isnan(z.imag) else '-'}{format_number(abs(z.imag))}i"


def run_circuit_eval(args, out: TextIO) -> int:
    path = Path(args.path)
    try:
        source = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    try:
        circuits = parse_file(source)
    except CircuitParseError as exc:
        for d in exc.diagnostics:
            print(f"{path}:{d}", file=sys.stderr)
        return EXIT_USAGE
    if not circuits:
        raise UsageError(f"{path} contains no circuit")
    try:
        vec = parse_input_pair(args.input)
    except ValueError as exc:
        raise UsageError(str(exc))
    for ast in circuits:
        m = compile_circuit(ast, require_lossless=args.require_lossless)
        ev = evaluate(m, vec)
        out.write(f"circuit {ast.name}\n")
        for i in range(2):
            for j in range(2):
                out.write(f"m{i + 1}{j + 1} {_fmt_complex(complex(m[i, j]))}\n")
        for k, (a, inten) in enumerate(zip(ev.amplitudes, ev.intensities), start=1):
            out.write(f"out{k} {_fmt_complex(a)}\n")
            out.write(f"i{k} {format_number(inten)}\n")
        out.write(f"input_norm {format_number(ev.input_norm)}\n")
        out.write(f"output_norm {format_number(ev.output_norm)}\n")
        out.write(f"unitarity_residual {unitarity_residual(m):.3e}\n")
    return EXIT_OK



def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", default="-", help="output file (default: standard output)")

    bs_flags = _Parser(add_help=False)
    bs_flags.add_argument("--r", type=_num, help="lossless interface reflectivity in (0, 1)")
    bs_flags.add_argument("--tt", type=_num, help="absorbing interface product t12*t21")
    bs_flags.add_argument("--rr", type=_num, help="absorbing interface product -r12*r21")

    parser = _Parser(
        prog="beamsplit",
        description="Slab beamsplitter, Mach-Zehnder and coincidence-correlation models. "
        "Numbers accept a trailing 'pi' multiplier, e.g. 0.115pi or 2pi.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bs-sweep", parents=[common, bs_flags], help="slab outputs vs internal phase")
    p.add_argument("--phi-min", type=_num, default=0.0)
    p.add_argument("--phi-max", type=_num, default=2 * math.pi)
    p.add_argument("--steps", type=_positive_int, default=1000)
    p.set_defaults(func=run_bs_sweep)

    p = sub.add_parser("mz-sweep", parents=[common, bs_flags], help="Mach-Zehnder outputs")
    p.add_argument("--mode", choices=("internal-phase", "opd"), required=True)
    p.add_argument("--x-min", type=_num, default=0.0)
    p.add_argument("--x-max", type=_num, default=2 * math.pi)
    p.add_argument("--steps", type=_positive_int, default=1000)
    p.add_argument("--phi", type=_num, help="internal phase in opd mode (default: first balance phase)")
    p.set_defaults(func=run_mz_sweep)

    p = sub.add_parser("hbt", parents=[common], help="correlation factor vs integration half-width")
    p.add_argument(
        "--omega", type=_num, default=coincidence.DEFAULT_OMEGA,
        help="angular rate k*c in rad/s (default 2.856e8 is a fitted model value, "
        "not a constant taken from measurement)",
    )
    p.add_argument("--tau-min", type=_num, default=0.0)
    p.add_argument("--tau-max", type=_num, required=True)
    p.add_argument("--steps", type=_positive_int, default=200)
    p.add_argument("--kernel", choices=("analytic", "step", "sinc2"), default="analytic")
    p.add_argument(
        "--tau-c", type=_tau_c, default=_MISSING,
        help="coherence time in s, or 'coupled' for tau_c = tau/2 on every row "
        "(required with step and sinc2 kernels)",
    )
    p.add_argument("--quad-points", type=int, default=10_000)
    p.set_defaults(func=run_hbt)

    p = sub.add_parser("balance", parents=[common], help="internal phases giving a 50/50 split")
    p.add_argument("--r", type=_num, required=True)
    p.set_defaults(func=run_balance)

    p = sub.add_parser("circuit-eval", parents=[common], help="compile and evaluate a .osc circuit")
    p.add_argument("path")
    p.add_argument("--input", default="1,0", help='input amplitudes "re1+im1i,re2+im2i"')
    p.add_argument("--require-lossless", action="store_true")
    p.set_defaults(func=run_circuit_eval)
    return parser


@contextlib.contextmanager
def _output(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    prog = f"beamsplit {args.command}"
    try:
        with _output(args.out) as out:
            return args.func(args, out)
    except NoSolutionError:
        print(f"{prog}: no 50/50 phase exists", file=sys.stderr)
        return EXIT_NO_SOLUTION
    except (UsageError, BeamsplitError) as exc:
        print(f"{prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
