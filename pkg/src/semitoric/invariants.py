"""Ingredient data for simple semitoric systems and their validity checks.

An ingredient list is a polygon together with one marker per focus-focus
point: the marked vertical line position lambda_j, the twisting integer
k_j, the volume value h_j and the Taylor series label.  The cut-direction
representative with all epsilon_j = +1 is used throughout; the remaining
polygons of the family are recovered as the orbit under the upward shears
at the marked lines.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .polygon import (
    POS_INF,
    ConvexPolygonalSet,
    ExtRat,
    VerticalRegion,
    _is_finite,
    global_shear,
    has_everywhere_finite_height,
    slice_interval,
    to_vertical_region,
)
from .taylor import TaylorSeries2, validate_series
from .validation import ValidationReport

MAX_MARKERS = 10  # permutation/orbit enumeration guard


class IncomparableError(ValueError):
    """The two ingredient lists live in different components of the space."""


@dataclass(frozen=True)
class Marker:
    """Focus-focus point data attached to the vertical line at lam."""

    lam: ExtRat
    k: int
    h: Union[Fraction, float]
    taylor: TaylorSeries2

    def __post_init__(self):
        if not isinstance(self.k, int):
            raise TypeError("twisting index must be an integer")
        if isinstance(self.lam, float) and self.lam != POS_INF:
            raise ValueError("lambda must be an exact rational or +inf")


@dataclass(frozen=True)
class SemitoricIngredients:
    """Polygon plus markers; semantic validity is checked separately."""

    polygon: ConvexPolygonalSet
    markers: tuple[Marker, ...]

    @property
    def mf(self) -> int:
        return len(self.markers)

    @property
    def k_vector(self) -> tuple[int, ...]:
        return tuple(mk.k for mk in self.markers)

    @property
    def lambdas(self) -> tuple[ExtRat, ...]:
        return tuple(mk.lam for mk in self.markers)


def shifted_representative(m: SemitoricIngredients, d: int) -> SemitoricIngredients:
    """The gauge image (T^d polygon, k - d): the same system, re-represented."""
    return SemitoricIngredients(
        global_shear(m.polygon, d),
        tuple(Marker(mk.lam, mk.k - d, mk.h, mk.taylor) for mk in m.markers))


# ---------------------------------------------------------------------------
# Orbit under cut-direction changes


def orbit_regions(polygon: ConvexPolygonalSet, lambdas: Sequence[ExtRat]
                  ) -> list[tuple[tuple[int, ...], VerticalRegion]]:
    """All 2^mf sheared images t_u of the polygon, as vertical regions."""
    if len(lambdas) > MAX_MARKERS:
        raise ValueError(f"marker count exceeds the enumeration bound {MAX_MARKERS}")
    base = to_vertical_region(polygon)
    out = []
    for u in itertools.product((0, 1), repeat=len(lambdas)):
        region = base
        for lam, uj in zip(lambdas, u):
            if uj:
                region = region.sheared(lam, 1)
        out.append((u, region))
    return out


def orbit_polygons(m: SemitoricIngredients) -> list[tuple[tuple[int, ...], VerticalRegion]]:
    return orbit_regions(m.polygon, m.lambdas)


# ---------------------------------------------------------------------------
# Validity


def _top_vertex_at(p: ConvexPolygonalSet, lam: Fraction):
    y = p.top(lam)
    for v in p.vertices:
        if v.on_top_boundary and v.point == (lam, y):
            return v
    return None


def validate_semitoric_polygon(p: ConvexPolygonalSet,
                               lambdas: Sequence[ExtRat]) -> ValidationReport:
    """Check the polygon conditions for a semitoric polygon with marked lines.

    Conditions: nonempty with everywhere finite height; lambdas strictly
    increasing, finite and interior to the x-support; the top point over
    each lambda is a corner with det(u, T^1 v) in {0, 1}; every other
    corner satisfies det(u, v) = 1; every cut-direction image t_u of the
    polygon is convex.
    """
    report = ValidationReport()
    if p.is_empty:
        report.add("polygon.empty", "polygon has empty interior")
        return report
    if not has_everywhere_finite_height(p):
        report.add("polygon.height", "polygon has unbounded vertical slices")
        return report

    lambdas = tuple(lambdas)
    if len(lambdas) > MAX_MARKERS:
        raise ValueError(f"marker count exceeds the enumeration bound {MAX_MARKERS}")
    ok_lambdas = []
    for j, lam in enumerate(lambdas):
        if not _is_finite(lam):
            report.add("lambda.finite", f"lambda_{j + 1} must be finite")
            continue
        if not p.x_lo < lam < p.x_hi:
            report.add("lambda.range",
                       f"lambda_{j + 1}={lam} is not interior to the x-support")
            continue
        ok_lambdas.append(lam)
    for a, b in zip(lambdas, lambdas[1:]):
        if _is_finite(a) and _is_finite(b) and not a < b:
            report.add("lambda.order", "marked lines must be strictly increasing")
            break

    marker_points = set()
    for lam in ok_lambdas:
        v = _top_vertex_at(p, lam)
        if v is None:
            report.add("corner.fake_or_hidden",
                       f"top boundary point over lambda={lam} is not a corner")
            continue
        marker_points.add(v.point)
        det = v.u[0] * v.v[1] - v.u[1] * v.v[0]
        det_top = det + v.u[0] * v.v[0]
        if det_top not in (0, 1):
            report.add("corner.fake_or_hidden",
                       f"corner over lambda={lam} is neither fake nor hidden "
                       f"(det(u, T v) = {det_top})")
    for v in p.vertices:
        if v.point in marker_points:
            continue
        det = v.u[0] * v.v[1] - v.u[1] * v.v[0]
        if det != 1:
            report.add("corner.delzant",
                       f"corner at {v.point} must be Delzant (det(u, v) = {det})")

    for u, region in orbit_regions(p, ok_lambdas):
        if not region.is_convex():
            report.add("orbit.convexity",
                       f"cut-direction image u={''.join(map(str, u))} is not convex")
    return report


def validate_ingredients(m: SemitoricIngredients) -> ValidationReport:
    """Full semantic check of an ingredient list."""
    report = validate_semitoric_polygon(m.polygon, m.lambdas)
    polygon_usable = report.ok
    for j, mk in enumerate(m.markers, start=1):
        report.merge(validate_series(mk.taylor), prefix=f"marker{j}")
        if polygon_usable:
            b, t = slice_interval(m.polygon, mk.lam)
            if not 0 < mk.h < t - b:
                report.add(f"marker{j}.h",
                           f"h must lie strictly between 0 and the slice length {t - b}")
    return report


# ---------------------------------------------------------------------------
# Twisting-index equivalence


def canonical_twist(k: Sequence[int]) -> tuple[int, ...]:
    """Class representative: sorted and shifted so the minimum is 0."""
    if not k:
        return ()
    s = sorted(k)
    return tuple(x - s[0] for x in s)


def twisting_equivalent(k1: Sequence[int], k2: Sequence[int]) -> Optional[tuple[int, ...]]:
    """The shared canonical form if the vectors are equivalent, else None."""
    if len(k1) != len(k2):
        raise IncomparableError("twisting vectors of different lengths")
    c1, c2 = canonical_twist(k1), canonical_twist(k2)
    return c1 if c1 == c2 else None


def appropriate_permutations(k1: Sequence[int], k2: Sequence[int]
                             ) -> list[tuple[tuple[int, ...], int]]:
    """All (p, c) with k1[j] = k2[p[j]] + c, sorted lexicographically in p.

    p is returned as a tuple mapping index j of the first vector to index
    p[j] of the second.  Empty when the vectors are not equivalent.
    """
    if len(k1) != len(k2):
        raise IncomparableError("twisting vectors of different lengths")
    mf = len(k1)
    if mf == 0:
        return [((), 0)]
    if mf > MAX_MARKERS:
        raise ValueError(f"marker count exceeds the enumeration bound {MAX_MARKERS}")
    diff = sum(k1) - sum(k2)
    if diff % mf != 0:
        return []
    c = diff // mf
    positions2: dict[int, list[int]] = {}
    for i, val in enumerate(k2):
        positions2.setdefault(val, []).append(i)
    groups1: dict[int, list[int]] = {}
    for j, val in enumerate(k1):
        groups1.setdefault(val, []).append(j)
    assignments = []
    for val, js in groups1.items():
        targets = positions2.get(val - c, [])
        if len(targets) != len(js):
            return []
        assignments.append((js, targets))
    out = []
    for choice in itertools.product(*(itertools.permutations(t) for _, t in assignments)):
        p = [-1] * mf
        for (js, _), perm in zip(assignments, choice):
            for j, i in zip(js, perm):
                p[j] = i
        out.append((tuple(p), c))
    out.sort()
    return out


def alignment_constant(k1: Sequence[int], k2: Sequence[int],
                       p: Sequence[int]) -> Optional[int]:
    """c with k1[j] = k2[p[j]] + c if p is appropriate, else None."""
    if len(k1) != len(k2) or sorted(p) != list(range(len(k1))):
        return None
    if not k1:
        return 0
    cs = {k1[j] - k2[p[j]] for j in range(len(k1))}
    return cs.pop() if len(cs) == 1 else None
