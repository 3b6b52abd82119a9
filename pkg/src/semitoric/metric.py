"""The moduli-space distance between two ingredient lists.

For an appropriate permutation p (one matching the twisting vectors up to
a common integer c), the comparison adds three parts: the measures of the
symmetric differences of corresponding cut-direction polygon images (the
second polygon gauged by T^-c), the capped Taylor distances of paired
series, and the absolute differences of paired volume values.  The
distance is the minimum over all appropriate permutations; lists with
different marker counts or inequivalent twisting vectors are incomparable
and at distance exactly 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .invariants import (
    IncomparableError,
    SemitoricIngredients,
    alignment_constant,
    appropriate_permutations,
)
from .measures import AdmissibleMeasure, symmetric_difference_measure
from .polygon import ConvexPolygonalSet, ExtRat, global_shear, to_vertical_region
from .taylor import TaylorSeries2, WeightFamily, taylor_distance_semitoric

INCOMPARABLE_DISTANCE = 1.0


class AlignmentError(ValueError):
    """The permutation does not match the two twisting vectors."""


@dataclass(frozen=True)
class AlignmentResult:
    """Comparison breakdown for one appropriate permutation."""

    permutation: tuple[int, ...]
    c: int
    polygon_part: Fraction
    taylor_parts: tuple[float, ...]
    h_parts: tuple[Union[Fraction, float], ...]

    @property
    def total(self) -> float:
        return (float(self.polygon_part) + sum(self.taylor_parts)
                + sum(float(h) for h in self.h_parts))


def orbit_pair_sum(poly1: ConvexPolygonalSet, lams1: Sequence[ExtRat],
                   poly2: ConvexPolygonalSet, lams2: Sequence[ExtRat],
                   p: Sequence[int], c: int, nu: AdmissibleMeasure) -> Fraction:
    """Sum over u in {0,1}^mf of nu(t_u(P1) s.d. t_{p(u)}(T^-c P2)), exactly.

    The exponent applied at the second polygon's marker j is u[p[j]].
    """
    base1 = to_vertical_region(poly1)
    base2 = to_vertical_region(global_shear(poly2, -c))
    total = Fraction(0)
    for u in itertools.product((0, 1), repeat=len(lams1)):
        r1 = base1
        for lam, uj in zip(lams1, u):
            if uj:
                r1 = r1.sheared(lam, 1)
        r2 = base2
        for j, lam in enumerate(lams2):
            if u[p[j]]:
                r2 = r2.sheared(lam, 1)
        total += symmetric_difference_measure(nu, r1, r2)
    return total


def _aligned_parts(poly1, lams1, poly2, lams2,
                   taylors1: Sequence[TaylorSeries2], taylors2: Sequence[TaylorSeries2],
                   hs1, hs2, p: Sequence[int], c: int,
                   nu: AdmissibleMeasure, bn: WeightFamily) -> AlignmentResult:
    taylor_parts = tuple(
        taylor_distance_semitoric(taylors1[j], taylors2[p[j]], bn)
        for j in range(len(p)))
    h_parts = tuple(abs(hs1[j] - hs2[p[j]]) for j in range(len(p)))
    polygon_part = orbit_pair_sum(poly1, lams1, poly2, lams2, p, c, nu)
    return AlignmentResult(tuple(p), c, polygon_part, taylor_parts, h_parts)


def _strict_parts(m1: SemitoricIngredients, m2: SemitoricIngredients,
                  p: Sequence[int], c: int,
                  nu: AdmissibleMeasure, bn: WeightFamily) -> AlignmentResult:
    return _aligned_parts(
        m1.polygon, m1.lambdas, m2.polygon, m2.lambdas,
        [mk.taylor for mk in m1.markers], [mk.taylor for mk in m2.markers],
        [mk.h for mk in m1.markers], [mk.h for mk in m2.markers],
        p, c, nu, bn)


def _require_constant(m1, m2, p) -> int:
    c = alignment_constant(m1.k_vector, m2.k_vector, p)
    if c is None:
        raise AlignmentError(f"permutation {tuple(p)} is not appropriate")
    return c


def polygon_distance_aligned(m1: SemitoricIngredients, m2: SemitoricIngredients,
                             p: Sequence[int], nu: AdmissibleMeasure) -> Fraction:
    """The polygon part of the comparison under a fixed appropriate permutation."""
    return orbit_pair_sum(m1.polygon, m1.lambdas, m2.polygon, m2.lambdas,
                          p, _require_constant(m1, m2, p), nu)


def comparison_with_alignment(m1: SemitoricIngredients, m2: SemitoricIngredients,
                              p: Sequence[int], nu: AdmissibleMeasure,
                              bn: WeightFamily) -> AlignmentResult:
    """Full comparison breakdown under a fixed appropriate permutation."""
    return _strict_parts(m1, m2, p, _require_constant(m1, m2, p), nu, bn)


def distance_component(m1: SemitoricIngredients, m2: SemitoricIngredients,
                       nu: AdmissibleMeasure, bn: WeightFamily) -> AlignmentResult:
    """Minimizing comparison over all appropriate permutations.

    Raises IncomparableError if no appropriate permutation exists; ties are
    broken by the lexicographically smallest permutation.
    """
    perms = appropriate_permutations(m1.k_vector, m2.k_vector)
    if not perms:
        raise IncomparableError("twisting vectors are not equivalent")
    best: Optional[AlignmentResult] = None
    for p, c in perms:
        res = _strict_parts(m1, m2, p, c, nu, bn)
        if best is None or res.total < best.total:
            best = res
    return best


def distance_full(m1: SemitoricIngredients, m2: SemitoricIngredients,
                  nu: AdmissibleMeasure, bn: WeightFamily) -> float:
    """The distance; incomparable lists are at distance exactly 1."""
    try:
        return distance_component(m1, m2, nu, bn).total
    except IncomparableError:
        return INCOMPARABLE_DISTANCE


def distance_id(m1: SemitoricIngredients, m2: SemitoricIngredients,
                nu: AdmissibleMeasure, bn: WeightFamily) -> float:
    """The identity-alignment distance: no permutation minimization.

    Defined when the identity is appropriate (k - k' constant); otherwise 1.
    Always at least distance_full.
    """
    if m1.mf != m2.mf:
        return INCOMPARABLE_DISTANCE
    ident = tuple(range(m1.mf))
    c = alignment_constant(m1.k_vector, m2.k_vector, ident)
    if c is None:
        return INCOMPARABLE_DISTANCE
    return _strict_parts(m1, m2, ident, c, nu, bn).total


def distance_report(m1: SemitoricIngredients, m2: SemitoricIngredients,
                    nu: AdmissibleMeasure, bn: WeightFamily,
                    alignment: str = "min") -> tuple[float, Optional[AlignmentResult]]:
    """(value, breakdown); breakdown is None when the lists are incomparable."""
    if alignment not in ("min", "id"):
        raise ValueError("alignment must be 'min' or 'id'")
    try:
        if alignment == "min":
            res = distance_component(m1, m2, nu, bn)
        else:
            if m1.mf != m2.mf:
                raise IncomparableError("different marker counts")
            ident = tuple(range(m1.mf))
            c = alignment_constant(m1.k_vector, m2.k_vector, ident)
            if c is None:
                raise IncomparableError("identity is not appropriate")
            res = _strict_parts(m1, m2, ident, c, nu, bn)
    except IncomparableError:
        return INCOMPARABLE_DISTANCE, None
    return res.total, res
