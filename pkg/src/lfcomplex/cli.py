"""Command-line interface.

Exit status is 0 on success, 1 on a usage error and 2 when the computation
itself rejects its input; every failure prints one diagnostic line to stderr.
Numbers are written in shortest round-trip form so output is byte-stable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from .algebra import TWO_PI, FractalPolar, check_alpha, frac_polar, mittag_leffler
from .conformance import DEFAULT_TOL, conformance_matrix
from .contour import (
    CircleContour,
    MultiPoleFunction,
    cauchy_coefficient,
    cauchy_point_value,
    derivative_via_contour,
    gauss_mean_value,
    quadrature_diagnostic,
)
from .documents import parse_series, series_to_dict
from .errors import DomainError, FractalError
from .residues import all_residues, residue_via_derivative
from .series import DerivativeConvention, FractalSeries, series_derivative_n, series_primitive

DEFAULT_ALPHAS = "0.3,0.5,0.7,1.0"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _complex_pair(text: str) -> complex:
    try:
        re, im = (float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from None
    return complex(re, im)


def _alpha_list(text: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--in", dest="infile", metavar="FILE", help="series document (JSON)")
    common.add_argument("--alpha", type=float, help="order parameter; overrides the document")
    common.add_argument("--convention", choices=["canonical", "scaled"], default="canonical")
    common.add_argument("--order", type=int, help="derivative order / pole order / fold count")
    common.add_argument("--k", type=int, help="single coefficient index")
    common.add_argument("--radius", type=float, default=1.0)
    common.add_argument("--nodes", type=int, default=1024)
    common.add_argument("--alphas", type=_alpha_list, default=_alpha_list(DEFAULT_ALPHAS))
    common.add_argument("--seeds", type=int, default=100)
    common.add_argument("--degree", type=int, default=8, help="random series degree for verify")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", metavar="FILE", help="output file (default: stdout)")

    parser = _Parser(prog="lfcomplex", description="Local fractional complex analysis toolkit.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    ml = sub.add_parser("mleval", parents=[common], help="Mittag-Leffler values")
    ml.add_argument("--at", type=_complex_pair, action="append", metavar="RE,IM",
                    help="evaluate E_alpha at this point (repeatable); default is a theta sweep")
    for name, text in [
        ("diff", "term-wise derivative (--order folds)"),
        ("integrate", "primitive (--order folds)"),
        ("taylor", "Taylor coefficients by contour extraction"),
        ("laurent", "Laurent coefficients by contour extraction"),
        ("residue", "generalized residues"),
        ("cauchy", "Cauchy point value or n-th derivative at the center"),
        ("gauss", "mean value over a circle"),
        ("quad", "Stieltjes quadrature of the loop integral and its gap"),
        ("verify", "theorem conformance matrix"),
    ]:
        sub.add_parser(name, parents=[common], help=text)
    return parser


# -- output ----------------------------------------------------------------------


def _fc(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _emit_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit_csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _output(args, json_obj, header, rows) -> str:
    if args.format == "csv":
        return _emit_csv(header, rows)
    return _emit_json(json_obj)


# -- commands --------------------------------------------------------------------


def _load(args):
    if not args.infile:
        raise UsageError(f"{args.command} requires --in FILE")
    try:
        text = Path(args.infile).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {args.infile}: {exc.strerror}") from None
    return parse_series(text, alpha=args.alpha)


def _load_series(args) -> FractalSeries:
    obj = _load(args)
    if isinstance(obj, MultiPoleFunction):
        raise DomainError(f"{args.command} needs a single-series document, not a multi-pole one")
    return obj


def _conv(args) -> DerivativeConvention:
    return DerivativeConvention.parse(args.convention)


def _contour(args, f: FractalSeries) -> CircleContour:
    return CircleContour(f.center, args.radius)


def _series_out(args, f: FractalSeries) -> str:
    return _output(args, series_to_dict(f), ["k", "re", "im"], [(k, c.real, c.imag) for k, c in f.items()])


def cmd_mleval(args) -> str:
    if args.alpha is None:
        raise UsageError("mleval requires --alpha")
    alpha = check_alpha(args.alpha)
    if args.at:
        vals = [(w, complex(mittag_leffler(alpha, w))) for w in args.at]
        if len(vals) == 1:
            obj = _fc(vals[0][1])
        else:
            obj = [{"w": [w.real, w.imag], **_fc(v)} for w, v in vals]
        rows = [(w.real, w.imag, v.real, v.imag) for w, v in vals]
        return _output(args, obj, ["w_re", "w_im", "value_re", "value_im"], rows)
    if args.nodes < 1:
        raise UsageError("--nodes must be positive")
    rows = []
    for j in range(args.nodes):
        t = TWO_PI * j / args.nodes
        v = complex(frac_polar(FractalPolar(args.radius, t), alpha))
        rows.append((t, v.real, v.imag))
    obj = [{"theta": t, "re": re, "im": im} for t, re, im in rows]
    return _output(args, obj, ["theta", "value_re", "value_im"], rows)


def cmd_diff(args) -> str:
    f = _load_series(args)
    return _series_out(args, series_derivative_n(f, 1 if args.order is None else args.order, _conv(args)))


def cmd_integrate(args) -> str:
    f = _load_series(args)
    for _ in range(1 if args.order is None else args.order):
        f = series_primitive(f, _conv(args))
    return _series_out(args, f)


def _coefficients(args, taylor: bool) -> str:
    f = _load_series(args)
    if taylor and f.kmin < 0:
        raise DomainError("taylor: the series has a principal part; use laurent")
    C = _contour(args, f)
    if args.k is not None:
        v = complex(cauchy_coefficient(f, C, args.k))
        return _output(args, _fc(v), ["k", "re", "im"], [(args.k, v.real, v.imag)])
    rows = []
    for k in range(f.kmin, f.kmax + 1):
        v = complex(cauchy_coefficient(f, C, k))
        rows.append((k, v.real, v.imag))
    obj = [{"k": k, "re": re, "im": im} for k, re, im in rows]
    return _output(args, obj, ["k", "re", "im"], rows)


def cmd_taylor(args) -> str:
    return _coefficients(args, taylor=True)


def cmd_laurent(args) -> str:
    return _coefficients(args, taylor=False)


def cmd_residue(args) -> str:
    obj = _load(args)
    if isinstance(obj, FractalSeries):
        if args.order is not None:
            v = complex(residue_via_derivative(obj, obj.center, args.order))
        else:
            v = complex(all_residues(obj)[0].residue)
        return _output(args, _fc(v), ["pole_x", "pole_y", "re", "im"], [(*obj.center, v.real, v.imag)])
    method = "derivative" if args.order is not None else "direct"
    reports = all_residues(obj, method)
    out = [{"pole": list(r.pole), "order": r.order, **_fc(r.residue)} for r in reports]
    rows = [(r.pole[0], r.pole[1], r.order, r.residue.re, r.residue.im) for r in reports]
    return _output(args, out, ["pole_x", "pole_y", "order", "re", "im"], rows)


def cmd_cauchy(args) -> str:
    f = _load_series(args)
    C = _contour(args, f)
    n = args.order or 0
    if n == 0:
        v = complex(cauchy_point_value(f, C))
    else:
        v = complex(derivative_via_contour(f, C, n, _conv(args)))
    return _output(args, _fc(v), ["re", "im"], [(v.real, v.imag)])


def cmd_gauss(args) -> str:
    f = _load_series(args)
    v = complex(gauss_mean_value(f, f.center, args.radius))
    return _output(args, _fc(v), ["re", "im"], [(v.real, v.imag)])


def cmd_quad(args) -> str:
    f = _load_series(args)
    res = quadrature_diagnostic(f, _contour(args, f), args.nodes)
    obj = {"value": _fc(res.value), "contour": _fc(res.exact), "gap": res.gap, "nodes": args.nodes}
    rows = [(t, p.real, p.imag, res.gap) for t, p in zip(res.thetas, res.partial)]
    return _output(args, obj, ["theta", "value_re", "value_im", "gap"], rows)


def cmd_verify(args) -> str:
    report = conformance_matrix(args.alphas, degree=args.degree, seeds=args.seeds, tol=args.tol)
    rows = report.rows()
    header = ["alpha", "convention", "theorem", "status", "max_residual"]
    return _output(args, rows, header, [tuple(r[h] for h in header) for r in rows])


COMMANDS = {
    "mleval": cmd_mleval,
    "diff": cmd_diff,
    "integrate": cmd_integrate,
    "taylor": cmd_taylor,
    "laurent": cmd_laurent,
    "residue": cmd_residue,
    "cauchy": cmd_cauchy,
    "gauss": cmd_gauss,
    "quad": cmd_quad,
    "verify": cmd_verify,
}


def run_command(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    """Run one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = COMMANDS[args.command](args)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 1
    except FractalError as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            stderr.write(f"error: cannot write {args.out}: {exc.strerror}\n")
            return 2
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
