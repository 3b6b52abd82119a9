"""Exact rational planar geometry for convex polygonal sets.

Sets are intersections of finitely many closed half-planes, possibly
unbounded.  All coordinates, slopes and areas are fractions.Fraction;
the only floats that appear are the +/-inf sentinels marking unbounded
interval ends.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Optional, Sequence, Union

Rat = Fraction
# Extended rational: a Fraction, or float +/-inf at unbounded ends.
ExtRat = Union[Fraction, float]

NEG_INF = -math.inf
POS_INF = math.inf


class DegenerateInputError(ValueError):
    """Input admits no two-dimensional interpretation (e.g. collinear points)."""


class InfiniteHeightError(ValueError):
    """A vertical slice of the set is unbounded."""


class OrientationError(ValueError):
    """Edge direction pair is not positively oriented."""


def _is_finite(x: ExtRat) -> bool:
    return not isinstance(x, float)


def _as_rat(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("exact rational required, got float")
    return Fraction(x)


def _interior_probe(lo: ExtRat, hi: ExtRat) -> Fraction:
    # Any point strictly inside (lo, hi); callers guarantee lo < hi.
    if _is_finite(lo) and _is_finite(hi):
        return (lo + hi) / 2
    if _is_finite(lo):
        return lo + 1
    if _is_finite(hi):
        return hi - 1
    return Fraction(0)


def primitive_vector(dx: Fraction, dy: Fraction) -> tuple[int, int]:
    """Scale a nonzero rational direction to a primitive integer vector."""
    dx, dy = Fraction(dx), Fraction(dy)
    if dx == 0 and dy == 0:
        raise ValueError("zero direction")
    m = dx.denominator * dy.denominator // gcd(dx.denominator, dy.denominator)
    ix, iy = int(dx * m), int(dy * m)
    g = gcd(abs(ix), abs(iy))
    return ix // g, iy // g


def _prim_right(slope: Fraction) -> tuple[int, int]:
    # Primitive vector along (1, slope).
    return (slope.denominator, slope.numerator)


def _prim_left(slope: Fraction) -> tuple[int, int]:
    return (-slope.denominator, -slope.numerator)


# ---------------------------------------------------------------------------
# Half-planes


@dataclass(frozen=True, order=True)
class HalfPlane:
    """Closed half-plane {(x, y) : a*x + b*y <= c} with (a, b) primitive integer."""

    a: int
    b: int
    c: Fraction

    @staticmethod
    def of(a, b, c) -> "HalfPlane":
        a, b, c = _as_rat(a), _as_rat(b), _as_rat(c)
        if a == 0 and b == 0:
            raise ValueError("half-plane normal must be nonzero")
        m = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        ia, ib = int(a * m), int(b * m)
        g = gcd(abs(ia), abs(ib))
        return HalfPlane(ia // g, ib // g, c * m / g)

    def contains(self, x, y) -> bool:
        return self.a * x + self.b * y <= self.c


def _coerce_halfplane(h) -> HalfPlane:
    if isinstance(h, HalfPlane):
        return h
    a, b, c = h
    return HalfPlane.of(a, b, c)


# ---------------------------------------------------------------------------
# Piecewise linear functions


@dataclass(frozen=True)
class PiecewiseLinearFn:
    """Continuous piecewise linear function on an interval [lo, hi].

    breaks are strictly increasing and strictly inside (lo, hi); segs holds
    (slope, intercept) per piece, one more than breaks.  Adjacent identical
    pieces are merged on construction, so equality of the dataclass fields
    is equality of functions.
    """

    lo: ExtRat
    hi: ExtRat
    breaks: tuple[Fraction, ...]
    segs: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("empty domain")
        if len(self.segs) != len(self.breaks) + 1:
            raise ValueError("need exactly one more piece than breakpoints")
        # Merge colinear neighbours so the representation is canonical.
        breaks, segs = [], [self.segs[0]]
        for x, seg in zip(self.breaks, self.segs[1:]):
            if seg == segs[-1]:
                continue
            breaks.append(x)
            segs.append(seg)
        if len(breaks) != len(self.breaks):
            object.__setattr__(self, "breaks", tuple(breaks))
            object.__setattr__(self, "segs", tuple(segs))
        prev = None
        for x, (s0, t0), (s1, t1) in zip(self.breaks, self.segs, self.segs[1:]):
            if not (self.lo < x < self.hi):
                raise ValueError("breakpoint outside open domain")
            if prev is not None and not prev < x:
                raise ValueError("breakpoints must increase")
            if s0 * x + t0 != s1 * x + t1:
                raise ValueError("discontinuity at breakpoint")
            prev = x

    @staticmethod
    def line(slope, intercept, lo: ExtRat = NEG_INF, hi: ExtRat = POS_INF) -> "PiecewiseLinearFn":
        return PiecewiseLinearFn(lo, hi, (), ((Fraction(slope), Fraction(intercept)),))

    @staticmethod
    def constant(value, lo: ExtRat = NEG_INF, hi: ExtRat = POS_INF) -> "PiecewiseLinearFn":
        return PiecewiseLinearFn.line(0, value, lo, hi)

    def __call__(self, x: Fraction) -> Fraction:
        s, t = self.segs[bisect_right(self.breaks, x)]
        return s * x + t

    def pieces(self) -> Iterator[tuple[ExtRat, ExtRat, Fraction, Fraction]]:
        """Yield (x0, x1, slope, intercept) over the domain, ends may be inf."""
        edges = [self.lo, *self.breaks, self.hi]
        for i, (s, t) in enumerate(self.segs):
            yield edges[i], edges[i + 1], s, t

    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(s for s, _ in self.segs)

    def negated(self) -> "PiecewiseLinearFn":
        return PiecewiseLinearFn(self.lo, self.hi, self.breaks,
                                 tuple((-s, -t) for s, t in self.segs))

    def shifted(self, dy) -> "PiecewiseLinearFn":
        dy = Fraction(dy)
        return PiecewiseLinearFn(self.lo, self.hi, self.breaks,
                                 tuple((s, t + dy) for s, t in self.segs))

    def plus(self, other: "PiecewiseLinearFn") -> "PiecewiseLinearFn":
        if (self.lo, self.hi) != (other.lo, other.hi):
            raise ValueError("domain mismatch")
        breaks = sorted(set(self.breaks) | set(other.breaks))
        segs = []
        edges = [self.lo, *breaks]
        for x0 in edges:
            sa, ta = self.segs[bisect_right(self.breaks, x0) if _is_finite(x0) else 0]
            sb, tb = other.segs[bisect_right(other.breaks, x0) if _is_finite(x0) else 0]
            segs.append((sa + sb, ta + tb))
        return PiecewiseLinearFn(self.lo, self.hi, tuple(breaks), tuple(segs))

    def minus(self, other: "PiecewiseLinearFn") -> "PiecewiseLinearFn":
        return self.plus(other.negated())

    def plus_ramp(self, lam: ExtRat, k: int) -> "PiecewiseLinearFn":
        """Add x -> k * max(0, x - lam); lam = +inf gives the identity."""
        if k == 0 or (isinstance(lam, float) and lam == POS_INF):
            return self
        lam = Fraction(lam)
        if lam >= self.hi:
            return self
        if lam <= self.lo:
            ramp = PiecewiseLinearFn.line(k, -k * lam, self.lo, self.hi)
        else:
            ramp = PiecewiseLinearFn(self.lo, self.hi, (lam,),
                                     ((Fraction(0), Fraction(0)), (Fraction(k), -k * lam)))
        return self.plus(ramp)

    def restricted(self, a: ExtRat, b: ExtRat) -> "PiecewiseLinearFn":
        if not (self.lo <= a < b <= self.hi):
            raise ValueError("restriction outside domain")
        i0 = bisect_right(self.breaks, a) if _is_finite(a) else 0
        i1 = bisect_left(self.breaks, b) if _is_finite(b) else len(self.breaks)
        return PiecewiseLinearFn(a, b, self.breaks[i0:i1], self.segs[i0:i1 + 1])


def _limit_left(s: Fraction, t: Fraction) -> ExtRat:
    # Limit of s*x + t as x -> -inf.
    return t if s == 0 else (NEG_INF if s > 0 else POS_INF)


def _limit_right(s: Fraction, t: Fraction) -> ExtRat:
    return t if s == 0 else (POS_INF if s > 0 else NEG_INF)


def _value_at(x: ExtRat, s: Fraction, t: Fraction, side: str) -> ExtRat:
    if _is_finite(x):
        return s * x + t
    return _limit_left(s, t) if side == "left" else _limit_right(s, t)


def _nonneg_interval(f: PiecewiseLinearFn) -> Optional[tuple[ExtRat, ExtRat]]:
    """For concave f on the full line, the closed interval {f >= 0} (or None)."""
    pieces = list(f.pieces())
    lo = None
    for x0, x1, s, t in pieces:
        v0 = _value_at(x0, s, t, "left")
        if v0 >= 0:
            lo = x0
            break
        v1 = _value_at(x1, s, t, "right")
        if v1 >= 0:
            lo = -t / s  # crossing inside the piece, so s != 0
            break
    if lo is None:
        return None
    hi = None
    for x0, x1, s, t in reversed(pieces):
        v1 = _value_at(x1, s, t, "right")
        if v1 >= 0:
            hi = x1
            break
        v0 = _value_at(x0, s, t, "left")
        if v0 >= 0:
            hi = -t / s
            break
    return lo, hi


def _lower_envelope(lines: Sequence[tuple[Fraction, Fraction]]) -> PiecewiseLinearFn:
    """Pointwise min of lines over the whole real line (a concave PL function)."""
    best: dict[Fraction, Fraction] = {}
    for s, t in lines:
        if s not in best or t < best[s]:
            best[s] = t
    items = sorted(best.items(), key=lambda st: st[0], reverse=True)
    env = [items[0]]
    bounds: list[Fraction] = []
    for s, t in items[1:]:
        while env:
            s0, t0 = env[-1]
            x = (t - t0) / (s0 - s)
            if bounds and x <= bounds[-1]:
                env.pop()
                bounds.pop()
                continue
            env.append((s, t))
            bounds.append(x)
            break
        if not env:
            env = [(s, t)]
    return PiecewiseLinearFn(NEG_INF, POS_INF, tuple(bounds), tuple(env))


def _upper_envelope(lines: Sequence[tuple[Fraction, Fraction]]) -> PiecewiseLinearFn:
    return _lower_envelope([(-s, -t) for s, t in lines]).negated()


# ---------------------------------------------------------------------------
# Vertical regions (the shape handed to measure integration)


@dataclass(frozen=True)
class VerticalRegion:
    """Finite-height set {(x, y) : bottom(x) <= y <= top(x)}, or the empty set."""

    bottom: Optional[PiecewiseLinearFn]
    top: Optional[PiecewiseLinearFn]

    def __post_init__(self):
        if (self.bottom is None) != (self.top is None):
            raise ValueError("bottom and top must both be present or both absent")
        if self.bottom is None:
            return
        if (self.bottom.lo, self.bottom.hi) != (self.top.lo, self.top.hi):
            raise ValueError("bottom and top must share a domain")
        diff = self.top.minus(self.bottom)
        for x0, x1, s, t in diff.pieces():
            if _value_at(x0, s, t, "left") < 0 or _value_at(x1, s, t, "right") < 0:
                raise ValueError("bottom exceeds top")

    @staticmethod
    def empty() -> "VerticalRegion":
        return VerticalRegion(None, None)

    @property
    def is_empty(self) -> bool:
        return self.bottom is None

    @property
    def x_lo(self) -> ExtRat:
        return self.bottom.lo

    @property
    def x_hi(self) -> ExtRat:
        return self.bottom.hi

    def slice_at(self, x) -> tuple[Fraction, Fraction]:
        return self.bottom(x), self.top(x)

    def sheared(self, lam: ExtRat, k: int) -> "VerticalRegion":
        """Image under the piecewise shear t^k at lam (identity left of lam)."""
        if self.is_empty:
            return self
        return VerticalRegion(self.bottom.plus_ramp(lam, k), self.top.plus_ramp(lam, k))

    def translated(self, dy) -> "VerticalRegion":
        if self.is_empty:
            return self
        return VerticalRegion(self.bottom.shifted(dy), self.top.shifted(dy))

    def is_convex(self) -> bool:
        """Convexity of the set: bottom convex and top concave."""
        if self.is_empty:
            return True
        sb = self.bottom.slopes()
        st = self.top.slopes()
        return all(a <= b for a, b in zip(sb, sb[1:])) and \
            all(a >= b for a, b in zip(st, st[1:]))


def vertical_shear(region: VerticalRegion, lam: ExtRat, k: int) -> VerticalRegion:
    """Apply (x, y) -> (x, y + k*max(0, x - lam)) to a finite-height region."""
    return region.sheared(lam, k)


# ---------------------------------------------------------------------------
# Corner classification


class CornerType(Enum):
    DELZANT = "delzant"
    HIDDEN_DELZANT = "hidden-delzant"
    FAKE = "fake"
    NON_DELZANT = "non-delzant"


def _check_primitive(v: tuple[int, int]) -> None:
    x, y = v
    if not (isinstance(x, int) and isinstance(y, int)):
        raise ValueError("edge direction must be an integer vector")
    if x == 0 and y == 0:
        raise ValueError("edge direction must be nonzero")
    if gcd(abs(x), abs(y)) != 1:
        raise ValueError("edge direction must be primitive")


def classify_corner(u: tuple[int, int], v: tuple[int, int],
                    on_top_boundary: bool) -> CornerType:
    """Classify a corner from its two emanating primitive edge directions.

    u, v must satisfy det(u, v) > 0.  Off the top boundary only the Delzant
    condition det(u, v) = 1 applies; on it, det(u, T^1 v) = 0 marks a fake
    corner and det(u, T^1 v) = 1 a hidden Delzant one, with fake taking
    precedence and det(u, v) = 1 deciding before hidden.
    """
    _check_primitive(u)
    _check_primitive(v)
    det = u[0] * v[1] - u[1] * v[0]
    if det <= 0:
        raise OrientationError(f"edge pair must be positively oriented, det={det}")
    # det(u, T^1 v) where T^1 v = (v_x, v_x + v_y)
    det_top = det + u[0] * v[0]
    if on_top_boundary and det_top == 0:
        return CornerType.FAKE
    if det == 1:
        return CornerType.DELZANT
    if on_top_boundary and det_top == 1:
        return CornerType.HIDDEN_DELZANT
    return CornerType.NON_DELZANT


# ---------------------------------------------------------------------------
# Convex polygonal sets


@dataclass(frozen=True)
class Vertex:
    """Polygon corner: location, emanating primitive edge directions with
    det(u, v) > 0, and whether it sits on the top boundary."""

    point: tuple[Fraction, Fraction]
    u: tuple[int, int]
    v: tuple[int, int]
    on_top_boundary: bool

    def corner_type(self) -> CornerType:
        return classify_corner(self.u, self.v, self.on_top_boundary)


@dataclass(frozen=True, eq=False)
class ConvexPolygonalSet:
    """Intersection of finitely many closed half-planes, in canonical form.

    halfplanes is the minimal sorted defining list; sets with empty interior
    are collapsed to the flagged empty set.  top/bottom are the boundary
    graphs where the respective side is bounded, None where it is not.
    """

    is_empty: bool
    halfplanes: tuple[HalfPlane, ...]
    x_lo: ExtRat
    x_hi: ExtRat
    top: Optional[PiecewiseLinearFn]
    bottom: Optional[PiecewiseLinearFn]
    vertices: tuple[Vertex, ...]

    def __eq__(self, other):
        if not isinstance(other, ConvexPolygonalSet):
            return NotImplemented
        if self.is_empty or other.is_empty:
            return self.is_empty and other.is_empty
        return self.halfplanes == other.halfplanes

    def __hash__(self):
        return hash(self.halfplanes) if not self.is_empty else hash(())

    @property
    def x_support(self) -> Optional[tuple[ExtRat, ExtRat]]:
        return None if self.is_empty else (self.x_lo, self.x_hi)

    def contains(self, x, y) -> bool:
        if self.is_empty:
            return False
        return all(h.contains(x, y) for h in self.halfplanes)


_EMPTY = ConvexPolygonalSet(True, (), NEG_INF, NEG_INF, None, None, ())


def _canonical_halfplanes(top: Optional[PiecewiseLinearFn],
                          bottom: Optional[PiecewiseLinearFn],
                          left_edge: bool, right_edge: bool,
                          x_lo: ExtRat, x_hi: ExtRat) -> tuple[HalfPlane, ...]:
    hs = []
    if top is not None:
        for s, t in top.segs:
            hs.append(HalfPlane.of(-s, 1, t))       # y <= s x + t
    if bottom is not None:
        for s, t in bottom.segs:
            hs.append(HalfPlane.of(s, -1, -t))      # y >= s x + t
    if left_edge:
        hs.append(HalfPlane.of(-1, 0, -x_lo))       # x >= x_lo
    if right_edge:
        hs.append(HalfPlane.of(1, 0, x_hi))         # x <= x_hi
    return tuple(sorted(set(hs)))


def _vertices_two_sided(top: PiecewiseLinearFn, bottom: PiecewiseLinearFn) -> tuple[Vertex, ...]:
    x_lo, x_hi = top.lo, top.hi
    out: list[Vertex] = []
    ts, bs = top.slopes(), bottom.slopes()
    if _is_finite(x_lo):
        tb, bb = top(x_lo), bottom(x_lo)
        if tb > bb:
            out.append(Vertex((x_lo, tb), (0, -1), _prim_right(ts[0]), True))
            out.append(Vertex((x_lo, bb), _prim_right(bs[0]), (0, 1), False))
        else:
            out.append(Vertex((x_lo, tb), _prim_right(bs[0]), _prim_right(ts[0]), True))
    for i, x in enumerate(bottom.breaks):
        out.append(Vertex((x, bottom(x)), _prim_right(bs[i + 1]), _prim_left(bs[i]), False))
    if _is_finite(x_hi):
        tb, bb = top(x_hi), bottom(x_hi)
        if tb > bb:
            out.append(Vertex((x_hi, bb), (0, 1), _prim_left(bs[-1]), False))
            out.append(Vertex((x_hi, tb), _prim_left(ts[-1]), (0, -1), True))
        else:
            out.append(Vertex((x_hi, tb), _prim_left(ts[-1]), _prim_left(bs[-1]), True))
    for i in range(len(top.breaks) - 1, -1, -1):
        x = top.breaks[i]
        out.append(Vertex((x, top(x)), _prim_left(ts[i]), _prim_right(ts[i + 1]), True))
    return tuple(out)


def _vertices_one_sided(env: PiecewiseLinearFn, is_top: bool) -> tuple[Vertex, ...]:
    out: list[Vertex] = []
    ss = env.slopes()
    if is_top:
        if _is_finite(env.lo):
            out.append(Vertex((env.lo, env(env.lo)), (0, -1), _prim_right(ss[0]), True))
        for i, x in enumerate(env.breaks):
            out.append(Vertex((x, env(x)), _prim_left(ss[i]), _prim_right(ss[i + 1]), True))
        if _is_finite(env.hi):
            out.append(Vertex((env.hi, env(env.hi)), _prim_left(ss[-1]), (0, -1), True))
    else:
        if _is_finite(env.lo):
            out.append(Vertex((env.lo, env(env.lo)), _prim_right(ss[0]), (0, 1), False))
        for i, x in enumerate(env.breaks):
            out.append(Vertex((x, env(x)), _prim_right(ss[i + 1]), _prim_left(ss[i]), False))
        if _is_finite(env.hi):
            out.append(Vertex((env.hi, env(env.hi)), (0, 1), _prim_left(ss[-1]), False))
    return tuple(out)


def polygon_from_halfplanes(halfplanes: Iterable) -> ConvexPolygonalSet:
    """Build the canonical convex polygonal set cut out by the half-planes.

    Degenerate intersections (empty, a point, a segment or a line) collapse
    to the flagged empty set.  Redundant half-planes are dropped and the
    remaining ones renormalized, so equal sets compare equal.
    """
    hs = [_coerce_halfplane(h) for h in halfplanes]
    if not hs:
        raise ValueError("need at least one half-plane")
    tightest: dict[tuple[int, int], Fraction] = {}
    for h in hs:
        key = (h.a, h.b)
        if key not in tightest or h.c < tightest[key]:
            tightest[key] = h.c

    upper_lines, lower_lines = [], []
    vx_lo: ExtRat = NEG_INF
    vx_hi: ExtRat = POS_INF
    for (a, b), c in tightest.items():
        if b > 0:
            upper_lines.append((Fraction(-a, b), c / b))
        elif b < 0:
            lower_lines.append((Fraction(-a, b), c / b))
        elif a > 0:
            vx_hi = min(vx_hi, c / a)
        else:
            vx_lo = max(vx_lo, c / a)

    top_env = _lower_envelope(upper_lines) if upper_lines else None
    bot_env = _upper_envelope(lower_lines) if lower_lines else None

    if top_env is not None and bot_env is not None:
        span = _nonneg_interval(top_env.minus(bot_env))
        if span is None:
            return _EMPTY
        d_lo, d_hi = max(span[0], vx_lo), min(span[1], vx_hi)
        if not d_lo < d_hi:
            return _EMPTY
        top = top_env.restricted(d_lo, d_hi)
        bottom = bot_env.restricted(d_lo, d_hi)
        if top(_interior_probe(d_lo, d_hi)) == bottom(_interior_probe(d_lo, d_hi)):
            return _EMPTY  # top and bottom coincide: a segment
        left_edge = _is_finite(d_lo) and top(d_lo) > bottom(d_lo)
        right_edge = _is_finite(d_hi) and top(d_hi) > bottom(d_hi)
        return ConvexPolygonalSet(
            False,
            _canonical_halfplanes(top, bottom, left_edge, right_edge, d_lo, d_hi),
            d_lo, d_hi, top, bottom, _vertices_two_sided(top, bottom))

    if not vx_lo < vx_hi:
        return _EMPTY
    if top_env is not None:
        top = top_env.restricted(vx_lo, vx_hi)
        return ConvexPolygonalSet(
            False,
            _canonical_halfplanes(top, None, _is_finite(vx_lo), _is_finite(vx_hi), vx_lo, vx_hi),
            vx_lo, vx_hi, top, None, _vertices_one_sided(top, True))
    if bot_env is not None:
        bottom = bot_env.restricted(vx_lo, vx_hi)
        return ConvexPolygonalSet(
            False,
            _canonical_halfplanes(None, bottom, _is_finite(vx_lo), _is_finite(vx_hi), vx_lo, vx_hi),
            vx_lo, vx_hi, None, bottom, _vertices_one_sided(bottom, False))
    return ConvexPolygonalSet(
        False,
        _canonical_halfplanes(None, None, _is_finite(vx_lo), _is_finite(vx_hi), vx_lo, vx_hi),
        vx_lo, vx_hi, None, None, ())


def polygon_from_vertices(points: Iterable) -> ConvexPolygonalSet:
    """Convex hull of exact rational points; errors if all are collinear."""
    pts = sorted({(_as_rat(x), _as_rat(y)) for x, y in points})
    if len(pts) < 3:
        raise DegenerateInputError("need at least three distinct points")

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInputError("points are collinear")
    hs = []
    for p, q in zip(hull, hull[1:] + hull[:1]):
        dx, dy = q[0] - p[0], q[1] - p[1]
        hs.append(HalfPlane.of(dy, -dx, dy * p[0] - dx * p[1]))
    return polygon_from_halfplanes(hs)


def has_everywhere_finite_height(p: ConvexPolygonalSet) -> bool:
    """True iff every vertical slice of the set is bounded."""
    if p.is_empty:
        return True
    return p.top is not None and p.bottom is not None


def slice_interval(p: ConvexPolygonalSet, x) -> Optional[tuple[Fraction, Fraction]]:
    """The compact interval p cut by the vertical line at x, or None if empty."""
    if p.is_empty:
        return None
    x = Fraction(x)
    if x < p.x_lo or x > p.x_hi:
        return None
    if p.top is None or p.bottom is None:
        raise InfiniteHeightError(f"slice at x={x} is unbounded")
    return p.bottom(x), p.top(x)


def to_vertical_region(p: ConvexPolygonalSet) -> VerticalRegion:
    """View a finite-height set as a vertical region; errors otherwise."""
    if p.is_empty:
        return VerticalRegion.empty()
    if p.top is None or p.bottom is None:
        raise InfiniteHeightError("set has unbounded vertical slices")
    return VerticalRegion(p.bottom, p.top)


def global_shear(p: ConvexPolygonalSet, k: int) -> ConvexPolygonalSet:
    """Image under T^k : (x, y) -> (x, k x + y); half-plane (a,b,c) -> (a - k b, b, c)."""
    if not isinstance(k, int):
        raise TypeError("shear power must be an integer")
    if p.is_empty:
        return p
    return polygon_from_halfplanes(
        HalfPlane.of(h.a - k * h.b, h.b, h.c) for h in p.halfplanes)


def shear_point(x, y, k: int) -> tuple[Fraction, Fraction]:
    """T^k on a single point."""
    x, y = Fraction(x), Fraction(y)
    return x, k * x + y


def corners(p: ConvexPolygonalSet) -> list[tuple[Vertex, CornerType]]:
    """Each vertex with its corner classification."""
    return [(v, v.corner_type()) for v in p.vertices]
