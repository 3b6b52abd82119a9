"""Measures nu on the plane with density g(x) dx dy, g depending on x only.

Admissibility (g positive, bounded above and away from zero on compacts,
x*g(x) integrable) makes every finite-height region have finite measure.
Each built-in family stores exact rational antiderivatives of g and x*g,
so region measures and symmetric-difference measures are exact fractions.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .polygon import (
    NEG_INF,
    POS_INF,
    ExtRat,
    PiecewiseLinearFn,
    VerticalRegion,
    _interior_probe,
    _is_finite,
)
from .validation import ValidationReport

Line = tuple[Fraction, Fraction]  # (slope, intercept)


@dataclass(frozen=True)
class DensityPiece:
    """g restricted to [lo, hi] together with antiderivatives G of g and H of x*g.

    G_lo/G_hi/H_lo/H_hi are the antiderivative limits used when the piece
    end is infinite; they must be finite for admissible densities.
    """

    lo: ExtRat
    hi: ExtRat
    g: Callable[[Fraction], Fraction]
    G: Callable[[Fraction], Fraction]
    H: Callable[[Fraction], Fraction]
    G_lo: Optional[Fraction] = None
    G_hi: Optional[Fraction] = None
    H_lo: Optional[Fraction] = None
    H_hi: Optional[Fraction] = None

    def G_at(self, x: ExtRat) -> Fraction:
        if _is_finite(x):
            return self.G(x)
        return self.G_lo if x == NEG_INF else self.G_hi

    def H_at(self, x: ExtRat) -> Fraction:
        if _is_finite(x):
            return self.H(x)
        return self.H_lo if x == NEG_INF else self.H_hi


@dataclass(frozen=True)
class AdmissibleMeasure:
    """Measure g(x) dx dy given by exact density pieces covering the line."""

    kind: str
    param: Optional[Fraction]
    pieces: tuple[DensityPiece, ...]

    def density(self, x) -> Fraction:
        x = Fraction(x)
        for p in self.pieces:
            if p.lo <= x <= p.hi:
                return p.g(x)
        raise ValueError("density pieces do not cover the line")

    def spec(self) -> dict:
        out = {"type": self.kind}
        if self.kind == "power_tail":
            out["s"] = str(self.param)
        elif self.kind == "rational_decay":
            out["q"] = str(self.param)
        return out


def nu0() -> AdmissibleMeasure:
    """Density 1 on [-1, 1] and |x|^-3 outside."""
    half = Fraction(1, 2)
    return AdmissibleMeasure("nu0", None, (
        DensityPiece(NEG_INF, Fraction(-1),
                     g=lambda x: (-x) ** -3,
                     G=lambda x: half * x ** -2,
                     H=lambda x: x ** -1,
                     G_lo=Fraction(0), H_lo=Fraction(0)),
        DensityPiece(Fraction(-1), Fraction(1),
                     g=lambda x: Fraction(1),
                     G=lambda x: x,
                     H=lambda x: half * x ** 2),
        DensityPiece(Fraction(1), POS_INF,
                     g=lambda x: x ** -3,
                     G=lambda x: -half * x ** -2,
                     H=lambda x: -(x ** -1),
                     G_hi=Fraction(0), H_hi=Fraction(0)),
    ))


def power_tail(s) -> AdmissibleMeasure:
    """Density 1 on [-1, 1] and |x|^-s outside; integer s >= 3.

    Admissibility only needs s > 2, but exact rational antiderivatives
    require an integer exponent; validate_admissible reports both facets.
    """
    s = Fraction(s)
    if s.denominator != 1 or s < 3:
        raise ValueError("power_tail exponent must be an integer >= 3")
    s = int(s)
    half = Fraction(1, 2)
    return AdmissibleMeasure("power_tail", Fraction(s), (
        DensityPiece(NEG_INF, Fraction(-1),
                     g=lambda x: (-x) ** -s,
                     G=lambda x: (-x) ** (1 - s) / (s - 1),
                     H=lambda x: (-x) ** (2 - s) / (2 - s),
                     G_lo=Fraction(0), H_lo=Fraction(0)),
        DensityPiece(Fraction(-1), Fraction(1),
                     g=lambda x: Fraction(1),
                     G=lambda x: x,
                     H=lambda x: half * x ** 2),
        DensityPiece(Fraction(1), POS_INF,
                     g=lambda x: x ** -s,
                     G=lambda x: x ** (1 - s) / (1 - s),
                     H=lambda x: x ** (2 - s) / (2 - s),
                     G_hi=Fraction(0), H_hi=Fraction(0)),
    ))


def rational_decay(q) -> AdmissibleMeasure:
    """Density (1 + |x|)^-q with integer q >= 3: smooth decay, no flat middle."""
    q = Fraction(q)
    if q.denominator != 1 or q < 3:
        raise ValueError("rational_decay exponent must be an integer >= 3")
    q = int(q)
    return AdmissibleMeasure("rational_decay", Fraction(q), (
        DensityPiece(NEG_INF, Fraction(0),
                     g=lambda x: (1 - x) ** -q,
                     G=lambda x: (1 - x) ** (1 - q) / (q - 1),
                     H=lambda x: (1 - x) ** (2 - q) / (2 - q) + (1 - x) ** (1 - q) / (q - 1),
                     G_lo=Fraction(0), H_lo=Fraction(0)),
        DensityPiece(Fraction(0), POS_INF,
                     g=lambda x: (1 + x) ** -q,
                     G=lambda x: (1 + x) ** (1 - q) / (1 - q),
                     H=lambda x: (1 + x) ** (2 - q) / (2 - q) - (1 + x) ** (1 - q) / (1 - q),
                     G_hi=Fraction(0), H_hi=Fraction(0)),
    ))


def measure_from_spec(spec: dict) -> AdmissibleMeasure:
    """Build a measure from {"type": ...} with exact parameters."""
    kind = spec.get("type")
    if kind == "nu0":
        return nu0()
    if kind == "power_tail":
        return power_tail(spec["s"])
    if kind == "rational_decay":
        return rational_decay(spec["q"])
    raise ValueError(f"unknown measure type: {kind!r}")


def validate_admissible(spec: dict) -> ValidationReport:
    """Check the admissibility conditions for a measure family spec."""
    report = ValidationReport()
    kind = spec.get("type")
    if kind == "nu0":
        return report
    if kind in ("power_tail", "rational_decay"):
        key = "s" if kind == "power_tail" else "q"
        try:
            e = Fraction(spec[key])
        except (KeyError, ValueError, TypeError):
            report.add("measure.param", f"{kind} requires a rational parameter {key!r}")
            return report
        if e <= 2:
            report.add("measure.integrability",
                       f"x*g(x) is not integrable for {key}={e} (requires {key} > 2)")
        if e.denominator != 1:
            report.add("measure.exactness",
                       f"exact antiderivatives require an integer {key}, got {e}")
        return report
    report.add("measure.unknown", f"unknown measure type: {kind!r}")
    return report


# ---------------------------------------------------------------------------
# Integration


def _integrate_linear(nu: AdmissibleMeasure, a: ExtRat, b: ExtRat,
                      slope: Fraction, intercept: Fraction) -> Fraction:
    """Exact integral of g(x) * (slope*x + intercept) over [a, b]."""
    total = Fraction(0)
    for p in nu.pieces:
        lo = max(a, p.lo)
        hi = min(b, p.hi)
        if not lo < hi:
            continue
        total += intercept * (p.G_at(hi) - p.G_at(lo)) + slope * (p.H_at(hi) - p.H_at(lo))
    return total


def region_measure(nu: AdmissibleMeasure, region: VerticalRegion) -> Fraction:
    """nu of a finite-height region, exactly."""
    if region.is_empty:
        return Fraction(0)
    total = Fraction(0)
    for x0, x1, s, t in region.top.minus(region.bottom).pieces():
        total += _integrate_linear(nu, x0, x1, s, t)
    return total


def lebesgue_area(region: VerticalRegion) -> Fraction:
    """Plain area; the region must have a bounded x-support."""
    if region.is_empty:
        return Fraction(0)
    if not (_is_finite(region.x_lo) and _is_finite(region.x_hi)):
        raise ValueError("area of a region with unbounded x-support")
    total = Fraction(0)
    for x0, x1, s, t in region.top.minus(region.bottom).pieces():
        total += s * (x1 ** 2 - x0 ** 2) / 2 + t * (x1 - x0)
    return total


def _line_at(f: PiecewiseLinearFn, x: Fraction) -> Line:
    return f.segs[bisect_right(f.breaks, x)]


def _line_eval(line: Line, x: Fraction) -> Fraction:
    return line[0] * x + line[1]


def _root_inside(line: Line, a: ExtRat, b: ExtRat) -> Optional[Fraction]:
    s, t = line
    if s == 0:
        return None
    x = -t / s
    return x if a < x < b else None


def _sd_on_cell(nu: AdmissibleMeasure, a: ExtRat, b: ExtRat,
                t1: Line, b1: Line, t2: Line, b2: Line) -> Fraction:
    """Symmetric-difference contribution where both regions are single lines."""
    cuts = [a, b]
    for pair in ((t1[0] - t2[0], t1[1] - t2[1]), (b1[0] - b2[0], b1[1] - b2[1])):
        r = _root_inside(pair, a, b)
        if r is not None:
            cuts.append(r)
    cuts.sort()
    total = Fraction(0)
    for p, q in zip(cuts, cuts[1:]):
        if not p < q:
            continue
        probe = _interior_probe(p, q)
        mt = t1 if _line_eval(t1, probe) <= _line_eval(t2, probe) else t2
        mb = b1 if _line_eval(b1, probe) >= _line_eval(b2, probe) else b2
        overlap = (mt[0] - mb[0], mt[1] - mb[1])
        inner = [p, q]
        r = _root_inside(overlap, p, q)
        if r is not None:
            inner.append(r)
        inner.sort()
        for pp, qq in zip(inner, inner[1:]):
            if not pp < qq:
                continue
            ov = overlap if _line_eval(overlap, _interior_probe(pp, qq)) > 0 else (Fraction(0), Fraction(0))
            s = t1[0] - b1[0] + t2[0] - b2[0] - 2 * ov[0]
            t = t1[1] - b1[1] + t2[1] - b2[1] - 2 * ov[1]
            total += _integrate_linear(nu, pp, qq, s, t)
    return total


def symmetric_difference_measure(nu: AdmissibleMeasure,
                                 r1: VerticalRegion, r2: VerticalRegion) -> Fraction:
    """nu of the symmetric difference of two finite-height regions, exactly.

    Slicewise the symmetric difference of two intervals has length
    len1 + len2 - 2*max(0, overlap); cells are chosen so that every
    bounding graph is a single line and the overlap has constant sign.
    """
    if r1.is_empty and r2.is_empty:
        return Fraction(0)
    if r1.is_empty:
        return region_measure(nu, r2)
    if r2.is_empty:
        return region_measure(nu, r1)

    events = set()
    for r in (r1, r2):
        for e in (r.x_lo, r.x_hi):
            if _is_finite(e):
                events.add(e)
        for f in (r.top, r.bottom):
            events.update(f.breaks)
    lo = min(r1.x_lo, r2.x_lo)
    hi = max(r1.x_hi, r2.x_hi)
    cuts = [lo] + sorted(x for x in events if lo < x < hi) + [hi]

    total = Fraction(0)
    for a, b in zip(cuts, cuts[1:]):
        if not a < b:
            continue
        probe = _interior_probe(a, b)
        in1 = r1.x_lo <= probe <= r1.x_hi
        in2 = r2.x_lo <= probe <= r2.x_hi
        if in1 and in2:
            total += _sd_on_cell(nu, a, b,
                                 _line_at(r1.top, probe), _line_at(r1.bottom, probe),
                                 _line_at(r2.top, probe), _line_at(r2.bottom, probe))
        elif in1 or in2:
            r = r1 if in1 else r2
            st, tt = _line_at(r.top, probe)
            sb, tb = _line_at(r.bottom, probe)
            total += _integrate_linear(nu, a, b, st - sb, tt - tb)
    return total
