"""Command-line front end: time-series data for each worked example plus verification reports.

Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 numeric error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import qsu2, sweedler, verify
from .expmap import s3_field, state_density, z_diffusion, z_state_weights
from .groups import IntWindow, WindowOverflow, s3
from .linalg import NumericError

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_NUMERIC = 0, 1, 2, 3
MAX_STEPS = 10 ** 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- argument parsing --------------------------------------------------------------------

def parse_real(text: str) -> float:
    """A decimal or ``p/q`` literal."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}")
    return float(value)


def parse_complex(text: str) -> complex:
    """``re,im`` or a single real part."""
    parts = text.split(",")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"expected re,im, got {text!r}")
    re = parse_real(parts[0])
    im = parse_real(parts[1]) if len(parts) == 2 else 0.0
    return complex(re, im)


@dataclass(frozen=True)
class TimeGrid:
    start: float
    stop: float
    steps: int

    @classmethod
    def parse(cls, text: str) -> "TimeGrid":
        parts = text.split(":")
        if len(parts) == 1:
            t = parse_real(parts[0])
            return cls(t, t, 0)
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"time grid must be start:stop:steps, got {text!r}")
        try:
            steps = int(parts[2])
        except ValueError:
            raise argparse.ArgumentTypeError(f"steps must be an integer, got {parts[2]!r}")
        if not 1 <= steps <= MAX_STEPS:
            raise argparse.ArgumentTypeError(f"steps must lie in [1, {MAX_STEPS}]")
        return cls(parse_real(parts[0]), parse_real(parts[1]), steps)

    def samples(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps + 1)


def parse_sweedler_element(text: str) -> sweedler.SweedlerElement:
    """Sums like ``t+x`` or ``2*t+0.5*tx`` over the basis ``1, t, x, tx``."""
    total = sweedler.SweedlerElement([0, 0, 0, 0])
    for token in text.replace(" ", "").replace("-", "+-").split("+"):
        if not token:
            continue
        coef, _, name = token.rpartition("*")
        if name.startswith("-"):
            coef, name = coef + "-1", name[1:]
        if name not in sweedler.BASIS:
            raise argparse.ArgumentTypeError(f"unknown basis element {name!r}")
        c = 1.0
        if coef in ("-1", "-"):
            c = -1.0
        elif coef:
            c = parse_real(coef)
        total = total + c * sweedler.SweedlerElement.basis(name)
    return total


# -- output --------------------------------------------------------------------------------

def _num(x) -> str:
    return repr(float(x))


@dataclass
class Series:
    """A time series ready for CSV or JSON output."""
    example: str
    params: dict
    header: list[str]
    rows: list[list] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header)
        for row in self.rows:
            w.writerow([_num(x) for x in row])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {"example": self.example, "params": self.params,
               "columns": self.header[1:],
               "times": [float(r[0]) for r in self.rows],
               "values": [[float(x) for x in r[1:]] for r in self.rows]}
        doc.update(self.extra)
        return json.dumps(doc, indent=1) + "\n"


def _emit(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _cplx(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


# -- examples ------------------------------------------------------------------------------

def run_s3(args) -> tuple[Series, list]:
    G = s3(args.composition)
    X = s3_field(args.p, args.q, args.r, G)
    times = args.t.samples()
    series = Series("s3", {"p": args.p, "q": args.q, "r": args.r, "composition": args.composition},
                    ["t", *G.labels])
    for t in times:
        series.rows.append([t, *state_density(X, t).weights])
    checks = []
    if args.verify:
        rng = np.random.default_rng(args.seed)
        checks = verify.s3_checks(args.p, args.q, args.r, _check_times(times), rng)
    return series, checks


def run_integers(args) -> tuple[Series, list]:
    W = IntWindow(args.window)
    if args.nmax > W.radius:
        raise UsageError(f"--nmax {args.nmax} exceeds the window radius {W.radius}")
    cols = range(-args.nmax, args.nmax + 1)
    pos = [W.position(n) for n in cols]
    times = args.t.samples()
    if args.mode == "diffusion":
        params = {"mode": "diffusion", "lambda": args.lam, "window": args.window}
        series = Series("integers", params, ["t", *map(str, cols), "mass"])
        for t in times:
            f = z_diffusion(args.lam, t, W).coeffs.real
            series.rows.append([t, *f[pos], f.sum()])
    else:
        xp = args.xp
        xm = -np.conj(xp)
        params = {"mode": "exponential", "field": args.field, "X+": _cplx(xp), "X-": _cplx(xm),
                  "window": args.window}
        series = Series("integers", params, ["t", *map(str, cols)])
        for t in times:
            w = _z_weights(xp, xm, t, W, args.route).weights
            series.rows.append([t, *w[pos]])
    checks = []
    if args.verify:
        lam = args.lam if args.mode == "diffusion" else None
        xp = args.xp if args.mode != "diffusion" else 1.0
        checks = verify.integer_checks(xp, _check_times(times), W, lam=lam)
    return series, checks


def _z_weights(xp, xm, t, W, route):
    if route != "auto":
        return z_state_weights(xp, xm, t, W, route)
    try:
        return z_state_weights(xp, xm, t, W, "closed")
    except NumericError:
        return z_state_weights(xp, xm, t, W, "matrix")


def run_qsu2(args) -> tuple[Series, list]:
    q, gamma = args.q, args.gamma
    if q <= 0:
        raise UsageError("q must be positive")
    delta = qsu2.real_delta(gamma, q) if args.delta is None else args.delta
    times = args.t.samples()
    one = qsu2.QSU2Element.one(q)
    samples = []
    for t in times:
        m = qsu2.evolve_generator(args.generator, gamma, delta, t, q)
        samples.append((t, m, qsu2.state_value(m, one)))
    keys = sorted({k for _, m, _ in samples for k in m.terms})
    labels = [qsu2.key_label(k) for k in keys]
    header = ["t"]
    for lab in labels:
        header += [f"{lab}.re", f"{lab}.im"]
    header += ["psi_1.re", "psi_1.im"]
    params = {"q": q, "gamma": _cplx(gamma), "delta": _cplx(delta), "generator": args.generator}
    series = Series("qsu2", params, header)
    records = []
    for t, m, psi in samples:
        row = [t]
        for k in keys:
            row += _cplx(m.coeff(k))
        series.rows.append(row + _cplx(psi))
        records.append({"generator": args.generator, "t": float(t),
                        "coefficients": {qsu2.key_label(k): _cplx(m.coeff(k)) for k in keys},
                        "psi_1": _cplx(psi)})
    series.extra = {"samples": records}
    checks = []
    if args.verify:
        checks = verify.qsu2_checks(q, gamma, delta, _check_times(times))
    return series, checks


def run_sweedler(args) -> tuple[Series, list]:
    a, b, lam = args.a, args.b, args.lam
    m0 = args.m0
    times = args.t.samples()
    header = ["s"]
    for name in sweedler.BASIS:
        header += [f"delta_{name}.re", f"delta_{name}.im"]
    params = {"a": _cplx(a), "b": _cplx(b), "lambda": _cplx(lam), "m0": _cplx_list(m0.coeffs)}
    series = Series("sweedler", params, header)
    for s in times:
        psi = sweedler.state_functional(sweedler.evolve(m0, a, b, s), lam)
        row = [s]
        for c in psi.coeffs:
            row += _cplx(c)
        series.rows.append(row)
    checks = []
    if args.verify:
        checks = verify.sweedler_checks(a, b, _check_times(times), m0)
    return series, checks


def _cplx_list(arr) -> list:
    return [_cplx(z) for z in arr]


def _check_times(times: np.ndarray, n: int = 5) -> np.ndarray:
    """A few representative samples; verification cost stays flat on dense grids."""
    if len(times) <= n:
        return times
    return times[np.linspace(0, len(times) - 1, n).round().astype(int)]


RUNNERS = {"s3": run_s3, "integers": run_integers, "qsu2": run_qsu2, "sweedler": run_sweedler}


# -- parser --------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--t", type=TimeGrid.parse, help="start:stop:steps (steps+1 samples)")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--verify", action="store_true",
                        help="run oracle cross-checks and report max residuals")
    common.add_argument("--report", help="verification report path (default stderr)")

    parser = _Parser(prog="hopfexp", description="Exponential maps on Hopf algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("s3", parents=[common], help="invariant fields on S3")
    p.add_argument("--p", type=parse_real, default=1.0)
    p.add_argument("--q", type=parse_real, default=1.0)
    p.add_argument("--r", type=parse_real, default=1.0)
    p.add_argument("--composition", choices=("left-to-right", "right-to-left"),
                   default="left-to-right")
    p.set_defaults(t=TimeGrid(0.0, 7.0, 700))

    p = sub.add_parser("integers", parents=[common], help="nearest-neighbour fields on Z")
    p.add_argument("--mode", choices=("exponential", "diffusion"), default="exponential")
    p.add_argument("--field", choices=("real",), default="real",
                   help="real field: X- = -conj(X+)")
    p.add_argument("--xp", type=parse_complex, default=1 + 0j, help="X+ as re,im")
    p.add_argument("--lambda", dest="lam", type=parse_real, default=1.0)
    p.add_argument("--window", type=int, default=64, help="window radius")
    p.add_argument("--route", choices=("auto", "closed", "matrix"), default="auto",
                   help="0F1 closed form, banded matrix, or closed form with matrix fallback")
    p.add_argument("--nmax", type=int, default=4, help="emit n in [-nmax, nmax]")
    p.set_defaults(t=TimeGrid(0.0, 5.0, 500))

    p = sub.add_parser("qsu2", parents=[common], help="the quantum group C_q[SU2]")
    p.add_argument("--q", type=parse_real, default=0.9)
    p.add_argument("--gamma", type=parse_complex, default=1j, help="re,im")
    p.add_argument("--delta", type=parse_complex, default=None,
                   help="re,im (default: the real field -q conj(gamma))")
    p.add_argument("--generator", choices=tuple("abcd"), default="a")
    p.set_defaults(t=TimeGrid(0.0, 3.0, 30))

    p = sub.add_parser("sweedler", parents=[common], help="the Sweedler-Taft algebra")
    p.add_argument("--a", type=parse_complex, default=1j, help="re,im")
    p.add_argument("--b", type=parse_complex, default=1 + 0j, help="re,im")
    p.add_argument("--lambda", dest="lam", type=parse_complex, default=1j, help="re,im")
    p.add_argument("--m0", type=parse_sweedler_element, default="t+x")
    p.set_defaults(t=TimeGrid(0.0, 2.0, 20))

    p = sub.add_parser("verify-all", help="run every oracle cross-check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="report path (default stdout)")
    return parser


def _write_report(checks, path, stream):
    text = json.dumps(verify.report(checks), indent=1) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        stream.write(text)
    bad = [name for name, res, tol in checks if not res <= tol]
    for name in bad:
        print(f"verification failed: {name}", file=sys.stderr)
    return EXIT_VERIFY if bad else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        if args.command == "verify-all":
            return _write_report(verify.verify_all(args.seed), args.out, sys.stdout)
        series, checks = RUNNERS[args.command](args)
        _emit(series.to_csv() if args.format == "csv" else series.to_json(), args.out)
        if args.verify:
            return _write_report(checks, args.report, sys.stderr)
        return EXIT_OK
    except UsageError as exc:
        print(f"hopfexp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericError, WindowOverflow, ArithmeticError, FloatingPointError) as exc:
        print(f"hopfexp: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"hopfexp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
