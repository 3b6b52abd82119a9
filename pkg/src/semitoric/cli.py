"""Command line: validate, dist, orbit, corners, taylordist, cauchy.

Every command prints one JSON document to stdout with a "config" header
recording the measure, weight family, Taylor truncation degree, alignment
mode, and h mode in effect, so outputs are self-describing.  Exit codes:
0 success, 1 semantic validation failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from fractions import Fraction
from typing import Optional, Sequence, Union

from .completion import (
    GeneralizedIngredients,
    canonical_order,
    cauchy_report,
    distance_completion_report,
    generalize,
    validate_generalized,
)
from .invariants import SemitoricIngredients, orbit_regions, validate_ingredients
from .io import (
    InputFormatError,
    dumps,
    ingredients_to_dict,
    load_ingredients,
    load_json,
    region_to_dict,
    taylor_from_dict,
)
from .measures import AdmissibleMeasure, measure_from_spec, nu0, region_measure
from .metric import INCOMPARABLE_DISTANCE
from .polygon import corners as polygon_corners
from .taylor import (
    WeightFamily,
    geometric_weights,
    power_weights,
    tail_bound,
    taylor_distance_semitoric,
    weights_spec,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FORMAT = 2

DEFAULT_TRUNCATION = 12


def _measure_arg(text: str) -> AdmissibleMeasure:
    name, _, arg = text.partition(":")
    try:
        if name == "nu0":
            if arg:
                raise ValueError("nu0 takes no parameter")
            return nu0()
        if name == "power_tail":
            return measure_from_spec({"type": "power_tail", "s": arg or "3"})
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    raise argparse.ArgumentTypeError(
        f"unknown measure {name!r}; use nu0 or power_tail:S")


def _weights_arg(text: str) -> WeightFamily:
    name, _, arg = text.partition(":")
    try:
        if name == "geometric":
            return geometric_weights(Fraction(arg or "1/2"))
        if name == "power":
            return power_weights(int(arg or "3"))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    raise argparse.ArgumentTypeError(
        f"unknown weight family {name!r}; use geometric:P/Q or power:E")


def _config(nu: AdmissibleMeasure, bn: WeightFamily, truncation: int,
            alignment: str = "min", h_mode: str = "raw") -> dict:
    return {
        "measure": nu.spec(),
        "weights": weights_spec(bn),
        "truncation": truncation,
        "alignment": alignment,
        "h_mode": h_mode,
    }


def _as_generalized(m) -> GeneralizedIngredients:
    if isinstance(m, SemitoricIngredients):
        return generalize(m)
    return m


def _truncated(g: GeneralizedIngredients, degree: int) -> GeneralizedIngredients:
    markers = tuple(
        dataclasses.replace(mk, taylor=mk.taylor.truncated(degree))
        for mk in g.markers)
    return GeneralizedIngredients(g.polygon, markers)


def _print(doc: dict) -> None:
    sys.stdout.write(dumps(doc))


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_validate(args) -> int:
    m = load_ingredients(args.file)
    if isinstance(m, SemitoricIngredients):
        report = validate_ingredients(m)
    else:
        report = validate_generalized(m)
    doc = {"config": _config(args.measure, args.bn, args.truncation)}
    doc.update(report.as_dict())
    _print(doc)
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_dist(args) -> int:
    g1 = _truncated(_as_generalized(load_ingredients(args.a)), args.truncation)
    g2 = _truncated(_as_generalized(load_ingredients(args.b)), args.truncation)
    value, res = distance_completion_report(
        g1, g2, args.measure, args.bn, h_mode=args.h_mode,
        alignment=args.alignment)
    doc = {
        "config": _config(args.measure, args.bn, args.truncation,
                          args.alignment, args.h_mode),
        "comparable": res is not None,
        "distance": value,
        "polygon_part_exact": None if res is None else res.polygon_part,
        "permutation": None if res is None else list(res.permutation),
        "c": None if res is None else res.c,
        "taylor_parts": None if res is None else list(res.taylor_parts),
        "h_parts": None if res is None else [
            float(h) for h in res.h_parts],
        "tail_bound": tail_bound(args.bn, args.truncation),
    }
    _print(doc)
    return EXIT_OK


def _cmd_orbit(args) -> int:
    m = load_ingredients(args.file)
    regions = orbit_regions(m.polygon, m.lambdas)
    doc = {
        "config": _config(args.measure, args.bn, args.truncation),
        "mf": m.mf,
        "regions": [{
            "u": list(u),
            "region": region_to_dict(region),
            "measure": region_measure(args.measure, region),
        } for u, region in regions],
    }
    _print(doc)
    if args.plot:
        _render_orbit(regions, args.plot)
    return EXIT_OK


def _render_orbit(regions, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 5))
    for idx, (u, region) in enumerate(regions):
        if region.is_empty:
            continue
        lo = float(region.x_lo) if region.x_lo != float("-inf") else -5.0
        hi = float(region.x_hi) if region.x_hi != float("inf") else 5.0
        xs, bot, top = [], [], []
        steps = 200
        for i in range(steps + 1):
            x = Fraction(lo) + Fraction(i, steps) * (Fraction(hi) - Fraction(lo))
            b, t = region.slice_at(x)
            xs.append(float(x))
            bot.append(float(b))
            top.append(float(t))
        label = "u=" + "".join(map(str, u)) if u else "base"
        ax.fill_between(xs, bot, top, alpha=0.25, label=label)
    ax.legend(loc="best", fontsize=8)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    fig.savefig(path)
    plt.close(fig)


def _cmd_corners(args) -> int:
    m = load_ingredients(args.file)
    doc = {
        "config": _config(args.measure, args.bn, args.truncation),
        "corners": [{
            "point": [v.point[0], v.point[1]],
            "u": list(v.u),
            "v": list(v.v),
            "on_top_boundary": v.on_top_boundary,
            "type": kind.value,
        } for v, kind in polygon_corners(m.polygon)],
    }
    _print(doc)
    return EXIT_OK


def _cmd_taylordist(args) -> int:
    s1 = taylor_from_dict(load_json(args.a)).truncated(args.truncation)
    s2 = taylor_from_dict(load_json(args.b)).truncated(args.truncation)
    doc = {
        "config": _config(args.measure, args.bn, args.truncation),
        "distance": taylor_distance_semitoric(s1, s2, args.bn),
        "tail_bound": tail_bound(args.bn, args.truncation),
    }
    _print(doc)
    return EXIT_OK


def _cmd_cauchy(args) -> int:
    if len(args.files) < 2:
        raise InputFormatError("cauchy needs at least two files")
    seq = [_truncated(_as_generalized(load_ingredients(f)), args.truncation)
           for f in args.files]
    report = cauchy_report(seq, args.measure, args.bn, args.eps,
                           h_mode=args.h_mode)
    doc = {"config": _config(args.measure, args.bn, args.truncation,
                             h_mode=args.h_mode)}
    doc.update(report.as_dict())
    _print(doc)
    return EXIT_OK


def _cmd_canonical(args) -> int:
    m = load_ingredients(args.file)
    g = canonical_order(_as_generalized(m))
    _print(ingredients_to_dict(g))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semitoric",
        description="Distances between semitoric ingredient lists.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--measure", type=_measure_arg, default=nu0(),
                       help="nu0 | power_tail:S | rational_decay:Q "
                            "(default nu0)")
        p.add_argument("--bn", type=_weights_arg,
                       default=geometric_weights(Fraction(1, 2)),
                       help="geometric:P/Q | power:E (default geometric:1/2)")
        p.add_argument("--truncation", type=int, default=DEFAULT_TRUNCATION,
                       metavar="D",
                       help="total-degree cutoff for Taylor series "
                            f"(default {DEFAULT_TRUNCATION})")

    p = sub.add_parser("validate", help="semantic checks on one file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("dist", help="distance between two files")
    p.add_argument("a")
    p.add_argument("b")
    common(p)
    p.add_argument("--alignment", choices=("min", "id"), default="min")
    p.add_argument("--h-mode", choices=("raw", "normalized"), default="raw",
                   dest="h_mode")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("orbit", help="all cut-direction images and measures")
    p.add_argument("file")
    common(p)
    p.add_argument("--plot", metavar="PATH",
                   help="write a rendering (format from the extension)")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("corners", help="classify every polygon corner")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_corners)

    p = sub.add_parser("taylordist", help="capped distance of two series files")
    p.add_argument("a")
    p.add_argument("b")
    common(p)
    p.set_defaults(func=_cmd_taylordist)

    p = sub.add_parser("cauchy", help="pairwise-distance report for a sequence")
    p.add_argument("files", nargs="+")
    p.add_argument("--eps", type=float, required=True)
    common(p)
    p.add_argument("--h-mode", choices=("raw", "normalized"), default="raw",
                   dest="h_mode")
    p.set_defaults(func=_cmd_cauchy)

    p = sub.add_parser("canonical",
                       help="canonical marker order of a generalized file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_canonical)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
