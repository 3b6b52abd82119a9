"""Completion-space elements and their distance.

The metric space of strict ingredient lists is not complete: marked lines
can collide or escape to infinity, the volume values can hit their bounds,
and the polygon can shrink away entirely.  This module represents the
polygonal part of the completion: marker positions may coincide, sit on
the boundary of the x-support, or equal +inf; volume values are stored
normalized in the closed interval [0, 1]; the polygon may be empty.
Colliding markers are put in a canonical order so equal elements have
equal representations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence, Union

from .invariants import (
    MAX_MARKERS,
    IncomparableError,
    SemitoricIngredients,
    appropriate_permutations,
)
from .measures import AdmissibleMeasure
from .metric import INCOMPARABLE_DISTANCE, AlignmentResult, orbit_pair_sum
from .polygon import (
    POS_INF,
    ConvexPolygonalSet,
    ExtRat,
    HalfPlane,
    _is_finite,
    has_everywhere_finite_height,
    polygon_from_halfplanes,
    slice_interval,
    to_vertical_region,
)
from .taylor import TaylorSeries2, WeightFamily, taylor_distance_semitoric, validate_series
from .validation import ValidationReport

H_MODES = ("normalized", "raw")


@dataclass(frozen=True)
class GeneralizedMarker:
    """Marker with relaxed position and a normalized volume value."""

    lam: ExtRat
    k: int
    h_tilde: Union[Fraction, float]
    taylor: TaylorSeries2

    def __post_init__(self):
        if not isinstance(self.k, int):
            raise TypeError("twisting index must be an integer")
        if isinstance(self.lam, float) and self.lam != POS_INF:
            raise ValueError("lambda must be an exact rational or +inf")


@dataclass(frozen=True)
class GeneralizedIngredients:
    """Polygon (possibly empty) plus relaxed markers."""

    polygon: ConvexPolygonalSet
    markers: tuple[GeneralizedMarker, ...]

    @property
    def mf(self) -> int:
        return len(self.markers)

    @property
    def k_vector(self) -> tuple[int, ...]:
        return tuple(mk.k for mk in self.markers)

    @property
    def lambdas(self) -> tuple[ExtRat, ...]:
        return tuple(mk.lam for mk in self.markers)


def generalize(m: SemitoricIngredients) -> GeneralizedIngredients:
    """Embed a strict ingredient list: h is divided by its slice length.

    The division is exact (floats convert to their exact rational value),
    so the raw-h distance on the images reproduces the strict distance.
    """
    markers = []
    for mk in m.markers:
        h = Fraction(mk.h)
        length = _slice_length(m.polygon, mk.lam)
        markers.append(GeneralizedMarker(
            mk.lam, mk.k, h / length if length else h, mk.taylor))
    return GeneralizedIngredients(m.polygon, tuple(markers))


def _slice_length(p: ConvexPolygonalSet, lam: ExtRat) -> Optional[Fraction]:
    if p.is_empty or not _is_finite(lam) or not p.x_lo <= lam <= p.x_hi:
        return None
    b, t = slice_interval(p, lam)
    return t - b


def h_comparison_value(g: GeneralizedIngredients, j: int,
                       h_mode: str = "normalized") -> Union[Fraction, float]:
    """The number entering the h part of the distance for marker j.

    raw mode rescales by the slice length at the marked line; markers at
    +inf or over an empty polygon have no slice and compare normalized.
    """
    if h_mode not in H_MODES:
        raise ValueError(f"h_mode must be one of {H_MODES}")
    mk = g.markers[j]
    if h_mode == "normalized":
        return mk.h_tilde
    length = _slice_length(g.polygon, mk.lam)
    return mk.h_tilde * length if length is not None else mk.h_tilde


# ---------------------------------------------------------------------------
# Canonical marker order


def _graded_position(ij):
    # total degree first; X = (1, 0) precedes Y = (0, 1)
    i, j = ij
    return (i + j, j)


def _series_cmp(s1: TaylorSeries2, s2: TaylorSeries2) -> int:
    for key in sorted(s1.support() | s2.support(), key=_graded_position):
        c1, c2 = s1.coefficient(*key), s2.coefficient(*key)
        if c1 != c2:
            return -1 if c1 < c2 else 1
    return 0


def _marker_cmp(m1: GeneralizedMarker, m2: GeneralizedMarker) -> int:
    if m1.lam != m2.lam:
        return -1 if m1.lam < m2.lam else 1
    if m1.h_tilde != m2.h_tilde:
        return -1 if m1.h_tilde < m2.h_tilde else 1
    return _series_cmp(m1.taylor, m2.taylor)


def canonical_order(g: GeneralizedIngredients) -> GeneralizedIngredients:
    """Stable sort of the markers by (lambda, h, graded series coefficients)."""
    return GeneralizedIngredients(
        g.polygon, tuple(sorted(g.markers, key=cmp_to_key(_marker_cmp))))


# ---------------------------------------------------------------------------
# Validity


def validate_generalized(g: GeneralizedIngredients) -> ValidationReport:
    """Relaxed constraint set for completion elements."""
    report = ValidationReport()
    if g.mf > MAX_MARKERS:
        raise ValueError(f"marker count exceeds the enumeration bound {MAX_MARKERS}")

    for j, mk in enumerate(g.markers, start=1):
        if not 0 <= mk.h_tilde <= 1:
            report.add(f"marker{j}.h", "normalized h must lie in [0, 1]")
        report.merge(validate_series(mk.taylor), prefix=f"marker{j}")

    if g.polygon.is_empty:
        for j, mk in enumerate(g.markers, start=1):
            if mk.lam != 0:
                report.add("empty.lambda",
                           f"lambda_{j} must be 0 alongside the empty set")
    else:
        if not has_everywhere_finite_height(g.polygon):
            report.add("polygon.height", "polygon has unbounded vertical slices")
            return report
        for j, mk in enumerate(g.markers, start=1):
            if _is_finite(mk.lam):
                if not g.polygon.x_lo <= mk.lam <= g.polygon.x_hi:
                    report.add("lambda.range",
                               f"lambda_{j}={mk.lam} is outside the closed x-support")
            elif g.polygon.x_hi != POS_INF:
                report.add("lambda.range",
                           f"lambda_{j}=+inf needs a right-unbounded polygon")
        for u, region in _orbit(g):
            if not region.is_convex():
                report.add("orbit.convexity",
                           f"cut-direction image u={''.join(map(str, u))} is not convex")

    for a, b in zip(g.markers, g.markers[1:]):
        if b.lam < a.lam:
            report.add("lambda.order", "marker positions must be nondecreasing")
            break
    if g.markers != canonical_order(g).markers:
        report.add("order.canonical",
                   "colliding markers must be sorted by (h, series coefficients)")
    return report


def _orbit(g: GeneralizedIngredients):
    base = to_vertical_region(g.polygon)
    for u in itertools.product((0, 1), repeat=g.mf):
        region = base
        for lam, uj in zip(g.lambdas, u):
            if uj:
                region = region.sheared(lam, 1)
        yield u, region


# ---------------------------------------------------------------------------
# Distance on the completion


def distance_completion_report(
        g1: GeneralizedIngredients, g2: GeneralizedIngredients,
        nu: AdmissibleMeasure, bn: WeightFamily,
        h_mode: str = "normalized",
        alignment: str = "min") -> tuple[float, Optional[AlignmentResult]]:
    """(value, breakdown); same minimization as the strict distance.

    Shears at +inf act as the identity; empty polygons contribute the
    full measure of the other side.  alignment "id" skips minimization
    and uses the identity permutation if it is appropriate.
    """
    if h_mode not in H_MODES:
        raise ValueError(f"h_mode must be one of {H_MODES}")
    if alignment not in ("min", "id"):
        raise ValueError("alignment must be 'min' or 'id'")
    try:
        perms = appropriate_permutations(g1.k_vector, g2.k_vector)
    except IncomparableError:
        return INCOMPARABLE_DISTANCE, None
    if alignment == "id":
        ident = tuple(range(g1.mf))
        perms = [(p, c) for p, c in perms if p == ident]
    if not perms:
        return INCOMPARABLE_DISTANCE, None
    hs1 = [h_comparison_value(g1, j, h_mode) for j in range(g1.mf)]
    hs2 = [h_comparison_value(g2, j, h_mode) for j in range(g2.mf)]
    best: Optional[AlignmentResult] = None
    for p, c in perms:
        taylor_parts = tuple(
            taylor_distance_semitoric(g1.markers[j].taylor, g2.markers[p[j]].taylor, bn)
            for j in range(g1.mf))
        h_parts = tuple(abs(hs1[j] - hs2[p[j]]) for j in range(g1.mf))
        polygon_part = orbit_pair_sum(
            g1.polygon, g1.lambdas, g2.polygon, g2.lambdas, p, c, nu)
        res = AlignmentResult(p, c, polygon_part, taylor_parts, h_parts)
        if best is None or res.total < best.total:
            best = res
    return best.total, best


def distance_completion(g1: GeneralizedIngredients, g2: GeneralizedIngredients,
                        nu: AdmissibleMeasure, bn: WeightFamily,
                        h_mode: str = "normalized") -> float:
    value, _ = distance_completion_report(g1, g2, nu, bn, h_mode)
    return value


def truncate_polygon(p: ConvexPolygonalSet, lo, hi) -> ConvexPolygonalSet:
    """Intersection with the vertical band lo <= x <= hi."""
    lo, hi = Fraction(lo), Fraction(hi)
    extra = (HalfPlane.of(-1, 0, -lo), HalfPlane.of(1, 0, hi))
    return polygon_from_halfplanes(tuple(p.halfplanes) + extra)


# ---------------------------------------------------------------------------
# Cauchy diagnostics


@dataclass(frozen=True)
class PairDistance:
    i: int
    j: int
    value: float
    permutation: Optional[tuple[int, ...]]

    def as_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "distance": self.value,
                "permutation": None if self.permutation is None
                else list(self.permutation)}


@dataclass(frozen=True)
class SequenceReport:
    """Finite-sample convergence diagnostic for a sequence of elements.

    consistent_from is the smallest index I such that every computed pair
    (i, j) with I <= i < j has distance < eps; the verdict never claims
    more than consistency with the Cauchy property on the sample.
    """

    eps: float
    pairs: tuple[PairDistance, ...]
    consistent_from: Optional[int]
    limit_candidate_index: Optional[int]

    @property
    def consistent_with_cauchy(self) -> bool:
        return self.consistent_from is not None

    @property
    def successive(self) -> tuple[PairDistance, ...]:
        return tuple(p for p in self.pairs if p.j == p.i + 1)

    def as_dict(self) -> dict:
        return {
            "eps": self.eps,
            "pairs": [p.as_dict() for p in self.pairs],
            "successive_distances": [p.value for p in self.successive],
            "consistent_with_cauchy": self.consistent_with_cauchy,
            "consistent_from": self.consistent_from,
            "limit_candidate_index": self.limit_candidate_index,
        }


def cauchy_report(seq: Sequence[GeneralizedIngredients],
                  nu: AdmissibleMeasure, bn: WeightFamily, eps: float,
                  h_mode: str = "normalized", max_lag: int = 3) -> SequenceReport:
    """Pairwise distances up to max_lag apart plus a Cauchy-consistency verdict."""
    if len(seq) < 2:
        raise ValueError("need at least two elements")
    if eps <= 0:
        raise ValueError("eps must be positive")
    pairs = []
    for i in range(len(seq) - 1):
        for j in range(i + 1, min(i + max_lag, len(seq) - 1) + 1):
            value, res = distance_completion_report(seq[i], seq[j], nu, bn, h_mode)
            pairs.append(PairDistance(i, j, value,
                                      None if res is None else res.permutation))
    bad = [p.i for p in pairs if p.value >= eps]
    start = max(bad) + 1 if bad else 0
    if start <= len(seq) - 2:
        consistent_from: Optional[int] = start
        limit: Optional[int] = len(seq) - 1
    else:
        consistent_from = None
        limit = None
    return SequenceReport(eps, tuple(pairs), consistent_from, limit)
