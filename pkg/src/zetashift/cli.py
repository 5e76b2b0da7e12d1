"""Command-line front end.

    zetashift <group> <action> [options]

Exit status: 0 success, 1 usage error, 2 invalid input, 3 numeric range.
Output is JSON unless ``--format csv`` is given or ``--out`` ends in .csv.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .errors import NumericRangeError, ValidationError
from .exponent_pairs import (HALF, as_fraction, generate_pairs, is_admissible, ledger,
                             log_exponent, lookup, lower_hull, optimize_theta,
                             sigma_bound, t_exponent)
from .mean_square import (DEFAULT_STEP, Window, lemma1_check, lemma1_suite, mean_square,
                          mv_majorant)
from .phi_shifts import PhiFunction, build_partition, check_axioms, growth_check, scan_shifted
from .serialize import (FORMATS, DensityCurve, OptimizeResult, PairRow, StirlingResult,
                        SuiteResult, ZetaValue, serialize)
from .special import (STIRLING_T, STIRLING_X, ComplexPoint, EvalConfig, decomposition_check,
                      randomized_suite, stirling_check, zeta, zeta_smoothed)
from .universality import (DiskDomain, ScanWindow, Target, curve_from_distances,
                           scan_interval)

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_RANGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def real(text) -> float:
    """Float from '0.75', '3/4' or a number."""
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        return float(text)
    try:
        s = str(text).strip()
        return float(Fraction(s)) if "/" in s else float(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not a real number: {text!r}") from exc


def real_list(text) -> list[float]:
    if isinstance(text, list):
        return [real(x) for x in text]
    return [real(x) for x in str(text).split(",") if x.strip()]


def threads_from(value) -> int:
    if value is None:
        env = os.environ.get("ZETASHIFT_THREADS")
        value = env if env else (os.cpu_count() or 1)
    try:
        n = int(value)
    except ValueError as exc:
        raise ValidationError(f"bad thread count {value!r}") from exc
    if n < 1:
        raise ValidationError("thread count must be >= 1")
    return n


# handlers ----------------------------------------------------------------
def _closure(a):
    if a.depth is None:
        raise ValidationError("--depth is required")
    return generate_pairs(int(a.depth), include_named=a.named)


def cmd_pairs_generate(a, cfg):
    sigma = as_fraction(a.sigma)
    rows = []
    for p in _closure(a):
        theta = t_exponent(p, sigma) if is_admissible(p, sigma) else None
        rows.append(PairRow(p, sigma, theta, log_exponent(p), sigma_bound(p)))
    return rows


def cmd_pairs_hull(a, cfg):
    return lower_hull(_closure(a))


def cmd_pairs_optimize(a, cfg):
    sigma = as_fraction(a.sigma)
    ps = _closure(a)
    best, theta = optimize_theta(ps, sigma)
    hull = lower_hull([p for p in ps if is_admissible(p, sigma)])
    return OptimizeResult(sigma, best, theta, log_exponent(best), len(ps), hull)


def cmd_pairs_ledger(a, cfg):
    return lookup(a.name) if a.name else ledger()


def _point(a) -> ComplexPoint:
    return ComplexPoint(real(a.sigma), real(a.t))


def cmd_zeta_eval(a, cfg):
    pt = _point(a)
    if a.smoothed is not None:
        return ZetaValue(pt, zeta_smoothed(pt.s, real(a.smoothed), cfg), "zeta_H")
    return ZetaValue(pt, zeta(pt.s, cfg))


def cmd_zeta_decomp(a, cfg):
    sigma0 = real(a.sigma0)
    if a.suite:
        reps = randomized_suite(a.seed, a.count, sigma0, cfg)
        return SuiteResult("decomposition", a.seed, max(r.residual for r in reps), reps)
    T = real(a.T) if a.T is not None else abs(real(a.t))
    return decomposition_check(_point(a), real(a.H), sigma0, T, cfg)


def cmd_zeta_stirling(a, cfg):
    xs = tuple(real_list(a.x)) if a.x else STIRLING_X
    ts = tuple(real_list(a.t)) if a.t else STIRLING_T
    return StirlingResult(xs, ts, stirling_check(xs, ts))


def _window(a) -> Window:
    return Window(real(a.T), real(a.H), real(a.step))


def cmd_ms_run(a, cfg):
    return mean_square(real(a.sigma), _window(a), cfg)


def cmd_ms_lemma1(a, cfg):
    if a.suite:
        res = lemma1_suite(cfg)
        return SuiteResult("lemma1", None, max(r.implied_constant for r in res), res)
    return lemma1_check(real(a.sigma), real(a.sigma0), _window(a), cfg)


def cmd_ms_mv(a, cfg):
    return mv_majorant(real(a.sigma), real(a.H), real(a.T), cfg, real(a.step))


def _disk(a) -> DiskDomain:
    return DiskDomain(real(a.center), real(a.radius), real(a.center_t))


def cmd_scan_run(a, cfg):
    w = ScanWindow(real(a.T), real(a.H), real(a.step))
    return scan_interval(_disk(a), Target.parse(a.target), w, real(a.epsilon),
                         int(a.samples), cfg)


def cmd_scan_curve(a, cfg):
    eps = real_list(a.eps)
    if not eps:
        raise ValidationError("--eps needs at least one value")
    if any(y < x for x, y in zip(eps, eps[1:])):
        raise ValidationError("--eps must be ascending")
    w = ScanWindow(real(a.T), real(a.H), real(a.step))
    res = scan_interval(_disk(a), Target.parse(a.target), w, max(eps), int(a.samples), cfg)
    return DensityCurve(w, curve_from_distances(res.distances, eps))


def cmd_phi_axioms(a, cfg):
    return check_axioms(PhiFunction.parse(a.phi), real(a.T), int(a.samples))


def cmd_phi_growth(a, cfg):
    return growth_check(PhiFunction.parse(a.phi), real(a.T), real(a.C), int(a.samples))


def cmd_phi_partition(a, cfg):
    return build_partition(PhiFunction.parse(a.phi), real(a.T))


def cmd_phi_scan(a, cfg):
    return scan_shifted(PhiFunction.parse(a.phi), _disk(a), Target.parse(a.target),
                        real(a.T), real(a.step), real(a.epsilon), int(a.samples), cfg)


# parser ------------------------------------------------------------------
def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("output and execution")
    g.add_argument("--out", help="write output to PATH instead of stdout")
    g.add_argument("--format", choices=FORMATS, help="json (default) or csv")
    g.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    g.add_argument("--threads", help="worker cap (default: $ZETASHIFT_THREADS or all cores)")
    g.add_argument("--config", help="JSON file whose keys mirror the flags")
    return p


def _disk_args(p):
    p.add_argument("--center", default="0.75", help="disk centre sigma")
    p.add_argument("--radius", default="0.05")
    p.add_argument("--center-t", dest="center_t", default="0")
    p.add_argument("--target", default="const:1.0",
                   help="const:c | poly:c0,c1,.. | exppoly:c0,c1,..")
    p.add_argument("--epsilon", default="0.75")
    p.add_argument("--samples", default="64", help="initial boundary samples")


def build_parser() -> tuple[_Parser, dict]:
    common = _common()
    root = _Parser(prog="zetashift", description=__doc__.splitlines()[0])
    root.add_argument("--version", action="version", version=f"zetashift {__version__}")
    groups = root.add_subparsers(dest="group", metavar="GROUP", parser_class=_Parser)
    groups.required = True
    leaves: dict = {}

    def leaf(sub, name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        p.set_defaults(func=fn)
        leaves[(sub.dest, name)] = p
        return p

    # pairs
    sub = groups.add_parser("pairs", help="exact exponent-pair calculus").add_subparsers(
        dest="pairs", metavar="ACTION", parser_class=_Parser)
    sub.required = True
    for name, fn, h in (("generate", cmd_pairs_generate, "closure under A/B processes"),
                        ("hull", cmd_pairs_hull, "lower convex hull of the closure"),
                        ("optimize", cmd_pairs_optimize, "minimise the T-exponent")):
        p = leaf(sub, name, fn, h)
        p.add_argument("--depth", help="process depth (<= 12)")
        p.add_argument("--named", action="store_true", help="include named literature pairs")
        p.add_argument("--sigma", default="1/2", help="exact rational, e.g. 31/52")
    p = leaf(sub, "ledger", cmd_pairs_ledger, "table of universality ranges")
    p.add_argument("--name", help="single entry, e.g. Theorem1")

    # zeta
    sub = groups.add_parser("zeta", help="zeta, Gamma and the smoothed decomposition") \
        .add_subparsers(dest="zeta", metavar="ACTION", parser_class=_Parser)
    sub.required = True
    p = leaf(sub, "eval", cmd_zeta_eval, "zeta(s) or zeta_H(s)")
    p.add_argument("--sigma", default="0.5")
    p.add_argument("--t", default="0")
    p.add_argument("--smoothed", metavar="H", help="evaluate zeta_H instead")
    p = leaf(sub, "decomp", cmd_zeta_decomp, "check zeta = zeta_H - residue - Perron integral")
    p.add_argument("--sigma", default="0.75")
    p.add_argument("--t", default="100")
    p.add_argument("--H", default="50")
    p.add_argument("--sigma0", default="0.5")
    p.add_argument("--T", help="default |t|")
    p.add_argument("--suite", action="store_true", help="randomized suite (uses --seed)")
    p.add_argument("--count", type=int, default=10)
    p = leaf(sub, "stirling", cmd_zeta_stirling, "empirical Stirling constant")
    p.add_argument("--x", help="comma list in (0,1]; default 0.1..1")
    p.add_argument("--t", help="comma list with |t| >= 1; default 1..50")

    # mean square
    sub = groups.add_parser("ms", help="short-interval mean squares").add_subparsers(
        dest="ms", metavar="ACTION", parser_class=_Parser)
    sub.required = True
    for name, fn, h in (("run", cmd_ms_run, "(1/H) int |zeta(sigma+it)|^2 dt"),
                        ("lemma1", cmd_ms_lemma1, "two-sided short-interval bound"),
                        ("mv", cmd_ms_mv, "smoothed mean square vs its majorant")):
        p = leaf(sub, name, fn, h)
        p.add_argument("--sigma", default="0.75")
        p.add_argument("--T", default="1000")
        p.add_argument("--H", default="100")
        p.add_argument("--step", default=str(DEFAULT_STEP))
        if name == "lemma1":
            p.add_argument("--sigma0", default="0.5")
            p.add_argument("--suite", action="store_true", help="fixed 20-configuration suite")

    # scanner
    sub = groups.add_parser("scan", help="universality scans over vertical shifts") \
        .add_subparsers(dest="scan", metavar="ACTION", parser_class=_Parser)
    sub.required = True
    for name, fn, h in (("run", cmd_scan_run, "density of good shifts in [T, T+H]"),
                        ("curve", cmd_scan_curve, "density as a function of epsilon")):
        p = leaf(sub, name, fn, h)
        _disk_args(p)
        p.add_argument("--T", default="100")
        p.add_argument("--H", default="100")
        p.add_argument("--step", default="0.05")
        if name == "curve":
            p.add_argument("--eps", default="0.1,0.5,1.0,5.0", help="ascending comma list")

    # phi
    sub = groups.add_parser(
        "phi", help="shifts tau -> phi(tau)",
        description="Exponential shifts must keep phi(2T) <= 1e6; for e^tau that "
                    "means T <= 6.9.").add_subparsers(dest="phi_action", metavar="ACTION",
                                                      parser_class=_Parser)
    sub.required = True
    phi_help = "exp:r | poly:c0,c1,.. | exppoly:base=a,coeffs=.. | doubleexp:alpha=a,beta=b,coeffs=.."
    for name, fn, h in (("axioms", cmd_phi_axioms, "check the growth axioms on [T, 2T]"),
                        ("growth", cmd_phi_growth, "phi(tau + C/psi) >= (C+1) phi(tau)"),
                        ("partition", cmd_phi_partition, "T_k = T_{k-1} + 1/psi(T_{k-1})"),
                        ("scan", cmd_phi_scan, "density of good tau in [T, 2T] for shifts "
                                               "phi(tau); phi(2T) must stay <= 1e6")):
        p = leaf(sub, name, fn, h)
        p.add_argument("--phi", default="exp:1", help=phi_help)
        p.add_argument("--T", default="10")
        if name in ("axioms", "growth"):
            p.add_argument("--samples", default="1000")
        if name == "growth":
            p.add_argument("--C", default="1")
        if name == "scan":
            _disk_args(p)
            p.add_argument("--step", default="0.001")
    return root, leaves


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError("config must be a JSON object")
    return data


def _leaf_key(ns) -> tuple:
    for dest in ("pairs", "zeta", "ms", "scan", "phi_action"):
        if getattr(ns, dest, None):
            return dest, getattr(ns, dest)
    raise UsageError("missing action")


def parse(argv) -> argparse.Namespace:
    parser, leaves = build_parser()
    ns = parser.parse_args(argv)
    if ns.config:
        data = _load_config(ns.config)
        leaf = leaves[_leaf_key(ns)]
        known = {a.dest for a in leaf._actions}
        eval_cfg = data.pop("eval", None)
        bad = sorted(set(data) - known)
        if bad:
            raise ValidationError(f"unknown config keys {bad}")
        leaf.set_defaults(**{k: (str(v) if isinstance(v, (int, float)) and
                                 not isinstance(v, bool) else v) for k, v in data.items()})
        ns = parser.parse_args(argv)
        ns.eval = eval_cfg
    else:
        ns.eval = None
    return ns


def _eval_config(ns) -> EvalConfig:
    extra = dict(ns.eval or {})
    extra["threads"] = threads_from(ns.threads)
    try:
        return EvalConfig(**extra)
    except TypeError as exc:
        raise ValidationError(f"bad eval config: {exc}") from exc


def _format(ns) -> str:
    if ns.format:
        return ns.format
    if ns.out and ns.out.lower().endswith(".csv"):
        return "csv"
    return "json"


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        ns = parse(argv)
        cfg = _eval_config(ns)
        data = serialize(ns.func(ns, cfg), _format(ns))
        if ns.out:
            with open(ns.out, "wb") as fh:
                fh.write(data)
        else:
            sys.stdout.write(data.decode())
            sys.stdout.flush()
        return EXIT_OK
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except NumericRangeError as exc:
        print(f"numeric range error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (ValidationError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
