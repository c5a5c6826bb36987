"""Command-line front end.

Exit codes: 0 on success, 1 when a verified claim fails, 2 on usage or
parameter errors.
"""
import argparse
import contextlib
import csv
import io
import json
import math
import re
import sys

import numpy as np

from . import verify
from ._validation import DomainTag
from .bounds import BoundKind, bound_value, deriv_bound_hol_strip
from .discgeom import (
    HypDisc,
    extents_numeric,
    figure_polylines,
    lambda_of_r,
    offcenter_re_extent,
    r_of_lambda,
    strip_disc_extents_closed,
    strip_disc_maxmod_closed,
)
from .exceptions import StripSchwarzError
from .hypgeom import dist_disc, dist_strip
from .planarmaps import (
    build_disc_automorphism,
    build_phi,
    build_phi_b,
    build_psi_K,
    build_tan_map,
    build_vertical_stretch,
    dilatation,
)

DECIMALS = 7
DOMAINS = {"disc": DomainTag.UNIT_DISC, "strip": DomainTag.STRIP}
MAPS = ("phi", "phi_b", "psi_K", "tan", "stretch", "automorphism")


class UsageError(Exception):
    """A flag value outside its valid range; ``flag`` names the option."""

    def __init__(self, flag, message):
        super().__init__(f"argument {flag}: {message}")
        self.flag = flag


# ------------------------------------------------------------------ parsing

_COMPLEX_RE = re.compile(r"^[+-]?[0-9.eE+\-]*[ij]?$")


def parse_complex(text):
    """Parse ``a+bi``, ``a+bj``, ``bi``, ``a`` or ``a,b`` into a complex number."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex number")
    if "," in s:
        re_part, im_part = s.split(",", 1)
        z = complex(float(re_part), float(im_part))
    else:
        if not _COMPLEX_RE.match(s):
            raise ValueError(f"cannot parse {text!r} as a complex number")
        z = complex(s.replace("i", "j"))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{text!r} is not finite")
    return z


def _complex_arg(text):
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{exc}; use a+bi or a,b") from None


def _finite(text):
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}") from None
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"{text!r} is not finite")
    return x


def _positive_int(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {n}")
    return n


def _require(cond, flag, message):
    if not cond:
        raise UsageError(flag, message)


def _check_r(r, flag="--r"):
    _require(r is not None, flag, "is required")
    _require(0.0 < r < 1.0, flag, f"must lie in (0, 1), got {r!r}")
    return r


def _check_b(b):
    _require(-1.0 < b < 1.0, "--b", f"must lie in (-1, 1), got {b!r}")
    return b


def _check_K(K):
    _require(K >= 1.0, "--K", f"must be >= 1, got {K!r}")
    return K


def _check_point(z, domain, flag):
    if domain is DomainTag.UNIT_DISC:
        _require(abs(z) < 1.0, flag, f"must lie in the unit disc |z| < 1, got {fmt_complex(z)}")
    else:
        _require(abs(z.real) < 1.0, flag,
                 f"must lie in the strip |Re z| < 1, got {fmt_complex(z)}")
    return z


def _radius_from(args):
    """The Euclidean radius ``r`` from ``--r`` or ``--lambda`` (exactly one)."""
    _require(not (args.r is not None and args.lam is not None), "--lambda",
             "give either --r or --lambda, not both")
    if args.lam is not None:
        _require(args.lam > 0.0, "--lambda", f"must be > 0, got {args.lam!r}")
        return r_of_lambda(args.lam)
    return _check_r(args.r)


# --------------------------------------------------------------- formatting

def fmt_real(x, decimals=DECIMALS):
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    out = f"{x:.{decimals}f}"
    return "0." + "0" * decimals if out == "-0." + "0" * decimals else out


def fmt_complex(z, decimals=DECIMALS):
    z = complex(z)
    im = fmt_real(abs(z.imag), decimals)
    sign = "-" if z.imag < 0 and im != fmt_real(0.0, decimals) else "+"
    return f"{fmt_real(z.real, decimals)}{sign}{im}i"


def _fmt_value(v):
    if isinstance(v, (complex, np.complexfloating)):
        return fmt_complex(v)
    if isinstance(v, (float, np.floating)):
        return fmt_real(v)
    return str(v)


def _json_value(v):
    if isinstance(v, (complex, np.complexfloating)):
        return [float(v.real), float(v.imag)]
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    return v


def render_rows(rows, output):
    """Render ``(key, value)`` rows as human text, JSON or CSV."""
    if output == "json":
        return json.dumps({k: _json_value(v) for k, v in rows}, indent=2) + "\n"
    if output == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in rows:
            w.writerow([k, _fmt_value(v)])
        return buf.getvalue()
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k:<{width}}  {_fmt_value(v)}\n" for k, v in rows)


# ---------------------------------------------------------------- commands

def _build_map(args):
    name = args.map
    if name == "phi":
        return build_phi()
    if name == "phi_b":
        return build_phi_b(_check_b(args.b))
    if name == "psi_K":
        return build_psi_K(_check_K(args.K))
    if name == "stretch":
        return build_vertical_stretch(_check_K(args.K))
    if name == "tan":
        return build_tan_map()
    _require(abs(args.a) < 1.0, "--a", f"must satisfy |a| < 1, got {fmt_complex(args.a)}")
    return build_disc_automorphism(args.a)


def cmd_map_eval(args):
    _require(args.z is not None, "--z", "is required")
    fmap = _build_map(args)
    if fmap.closed_domain:
        _require(abs(args.z.real) <= 1.0, "--z", "must lie in the closed strip |Re z| <= 1")
    else:
        _check_point(args.z, fmap.domain, "--z")
    w = complex(fmap(args.z))
    fz, fzbar = fmap.derivatives(args.z)
    rows = [("map", fmap.name), ("z", args.z), ("f(z)", w),
            ("f_z", complex(fz)), ("f_zbar", complex(fzbar)),
            ("dilatation", float(dilatation(abs(fz), abs(fzbar))))]
    return rows, 0


def cmd_dist(args):
    domain = DOMAINS[args.domain]
    _require(args.from_ is not None, "--from", "is required")
    _require(args.to is not None, "--to", "is required")
    z1 = _check_point(args.from_, domain, "--from")
    z2 = _check_point(args.to, domain, "--to")
    d = dist_disc(z1, z2) if domain is DomainTag.UNIT_DISC else dist_strip(z1, z2)
    return [("domain", args.domain), ("from", z1), ("to", z2), ("distance", float(d))], 0


def cmd_extents(args):
    r = _radius_from(args)
    lam = lambda_of_r(r)
    domain = DOMAINS[args.domain]
    _require(args.n >= 64, "--n", f"must be >= 64, got {args.n}")
    b = _check_b(args.b) if domain is DomainTag.STRIP else 0.0
    if domain is DomainTag.UNIT_DISC:
        _require(args.b == 0.0, "--b", "off-centre discs are only offered in the strip")
    ext = extents_numeric(HypDisc(domain, b, lam), args.n)
    rows = [("domain", args.domain), ("r", r), ("lambda", lam), ("b", b),
            ("re_min", ext.re_min), ("re_max", ext.re_max),
            ("im_min", ext.im_min), ("im_max", ext.im_max),
            ("mod_max", ext.mod_max), ("argmax_mod", ext.argmax_mod)]
    if domain is DomainTag.STRIP:
        m, M = offcenter_re_extent(b, r)
        rows += [("re_min_closed", m), ("re_max_closed", M)]
        if b == 0.0:
            re_max, im_max = strip_disc_extents_closed(r)
            rows += [("im_max_closed", im_max), ("mod_max_closed", strip_disc_maxmod_closed(lam))]
    return rows, 0


def cmd_bounds(args):
    r = _check_r(args.r)
    b = _check_b(args.b)
    K = _check_K(args.K)
    m, M = bound_value(BoundKind.harmonic_interval(b), r)
    rows = [
        ("r", r),
        ("classical_hol", bound_value(BoundKind.classical_hol(), r)),
        ("harmonic_disc", bound_value(BoundKind.harmonic_disc(), r)),
        (f"harmonic_interval_lower(b={b:g})", m),
        (f"harmonic_interval_upper(b={b:g})", M),
        ("hol_strip", bound_value(BoundKind.hol_strip(), r)),
        (f"hqr_strip(K={K:g})", bound_value(BoundKind.hqr_strip(K), r)),
        ("hol_strip_derivative_at_0", deriv_bound_hol_strip()),
    ]
    return [(k, float(v) if not isinstance(v, str) else v) for k, v in rows], 0


def figure_csv(r, n):
    """CSV text with columns ``curve_id,theta,x,y`` for both closed polylines."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["curve_id", "theta", "x", "y"])
    for curve_id, theta, pts in figure_polylines(r, n):
        for t, p in zip(theta, pts):
            w.writerow([curve_id, fmt_real(t), fmt_real(p.real), fmt_real(p.imag)])
    return buf.getvalue()


def cmd_figure(args):
    r = _radius_from(args)
    _require(args.n >= 4, "--n", f"must be >= 4, got {args.n}")
    if args.output == "csv" or args.out:
        return figure_csv(r, args.n), 0
    curves = figure_polylines(r, args.n)
    rows = [("r", r), ("lambda", lambda_of_r(r)), ("n", args.n)]
    for curve_id, _, pts in curves:
        rows += [(f"{curve_id}_x_max", float(pts.real.max())),
                 (f"{curve_id}_y_max", float(pts.imag.max()))]
    return rows, 0


def _summary_rows(reports):
    rows = []
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        rows.append((rep.claim_id, f"{status}  max_violation={rep.max_violation:.3e}"
                                   f"  tol={rep.tolerance:.1e}"))
    failed = sum(not r.passed for r in reports)
    rows.append(("summary", f"{len(reports) - failed}/{len(reports)} passed"))
    return rows


def _verify_csv(reports):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["claim_id", "pass", "trials", "seed", "tolerance", "max_violation"])
    for rep in reports:
        w.writerow([rep.claim_id, str(rep.passed).lower(), rep.trials, rep.seed,
                    repr(float(rep.tolerance)), repr(float(rep.max_violation))])
    return buf.getvalue()


def cmd_verify(args):
    if args.report:
        try:
            with open(args.report, encoding="utf-8") as fh:
                text = fh.read()
            reports = verify.reports_from_json(text)
            seed = json.loads(text).get("seed", args.seed)
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError("--report", f"cannot read report: {exc}") from None
    else:
        _require(args.trials >= 1, "--trials", f"must be >= 1, got {args.trials}")
        if args.tol is not None:
            _require(args.tol > 0.0, "--tol", f"must be > 0, got {args.tol!r}")
        cfg = verify.VerifyConfig(seed=args.seed, trials=args.trials, tolerance=args.tol)
        reports = verify.run_all(cfg)
        seed = args.seed
    code = 0 if all(r.passed for r in reports) else 1
    if args.output == "json":
        return verify.reports_to_json(reports, seed), code
    if args.output == "csv":
        return _verify_csv(reports), code
    return _summary_rows(reports), code


COMMANDS = {
    "map-eval": cmd_map_eval,
    "dist": cmd_dist,
    "extents": cmd_extents,
    "bounds": cmd_bounds,
    "figure": cmd_figure,
    "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("human", "json", "csv"), default="human")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="stripschwarz",
        description="Maps, hyperbolic geometry and Schwarz-type bounds for the disc and the strip.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map-eval", parents=[common], help="evaluate a map and its Wirtinger derivatives")
    p.add_argument("--map", choices=MAPS, default="phi")
    p.add_argument("--z", type=_complex_arg)
    p.add_argument("--b", type=_finite, default=0.0)
    p.add_argument("--K", type=_finite, default=1.0)
    p.add_argument("--a", type=_complex_arg, default=0j)

    p = sub.add_parser("dist", parents=[common], help="hyperbolic distance")
    p.add_argument("--domain", choices=tuple(DOMAINS), default="strip")
    p.add_argument("--from", dest="from_", metavar="Z", type=_complex_arg)
    p.add_argument("--to", metavar="Z", type=_complex_arg)

    p = sub.add_parser("extents", parents=[common], help="Euclidean extents of a hyperbolic disc")
    p.add_argument("--domain", choices=tuple(DOMAINS), default="strip")
    p.add_argument("--r", type=_finite)
    p.add_argument("--lambda", dest="lam", type=_finite)
    p.add_argument("--b", type=_finite, default=0.0)
    p.add_argument("--n", type=_positive_int, default=4096)

    p = sub.add_parser("bounds", parents=[common], help="Schwarz-type bounds at |z| = r")
    p.add_argument("--r", type=_finite)
    p.add_argument("--b", type=_finite, default=0.0)
    p.add_argument("--K", type=_finite, default=1.0)

    p = sub.add_parser("figure", parents=[common], help="export disc and strip boundary polylines")
    p.add_argument("--r", type=_finite)
    p.add_argument("--lambda", dest="lam", type=_finite)
    p.add_argument("--n", type=_positive_int, default=720)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--tol", type=_finite)
    p.add_argument("--report", help="re-read a JSON report instead of running the suite")
    return parser


def run(argv=None, stdout=None, stderr=None):
    """Parse ``argv``, run the command and return the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=stderr)
        return 2
    except (StripSchwarzError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=stderr)
        return 2
    text = result if isinstance(result, str) else render_rows(result, args.output)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
