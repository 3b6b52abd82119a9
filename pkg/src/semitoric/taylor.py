"""Distances between formal Taylor series in two variables.

A series is the data of coefficients sigma_ij; distances compare them
termwise, capped by a summable weight family b_n (n = i + j), so the
result is finite and the induced topology is coefficientwise convergence.
The angular coefficient sigma_01 lives on a circle of circumference 2*pi
and is compared modulo that wrap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from scipy.special import zeta

from .validation import ValidationReport

TAU = 2 * math.pi


class NormalizationError(ValueError):
    """Series does not satisfy the semitoric normalization."""


@dataclass(frozen=True)
class TaylorSeries2:
    """Formal series sum sigma_ij X^i Y^j, stored sparsely; zero terms dropped."""

    coeffs: Mapping[tuple[int, int], float] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.coeffs.items():
            if not (isinstance(i, int) and isinstance(j, int) and i >= 0 and j >= 0):
                raise ValueError(f"bad exponent pair {(i, j)!r}")
            c = float(c)
            if c != 0.0:
                clean[(i, j)] = c
        object.__setattr__(self, "coeffs", clean)

    @staticmethod
    def of(sigma01: float = 0.0, terms: Iterable[tuple[int, int, float]] = ()) -> "TaylorSeries2":
        coeffs = {(0, 1): float(sigma01)}
        for i, j, c in terms:
            if (i, j) in ((0, 0), (0, 1)):
                raise ValueError("constant and (0,1) terms are fixed by normalization")
            coeffs[(i, j)] = c
        return TaylorSeries2(coeffs)

    @property
    def sigma01(self) -> float:
        return self.coeffs.get((0, 1), 0.0)

    def coefficient(self, i: int, j: int) -> float:
        return self.coeffs.get((i, j), 0.0)

    def truncated(self, degree: int) -> "TaylorSeries2":
        return TaylorSeries2({k: c for k, c in self.coeffs.items() if k[0] + k[1] <= degree})

    def support(self) -> set[tuple[int, int]]:
        return set(self.coeffs)


ZERO_SERIES = TaylorSeries2()


def validate_series(s: TaylorSeries2) -> ValidationReport:
    """Semitoric normalization: sigma_00 = 0 and sigma_01 in [0, 2*pi)."""
    report = ValidationReport()
    if s.coefficient(0, 0) != 0.0:
        report.add("taylor.constant", "constant coefficient must vanish")
    if not 0.0 <= s.sigma01 < TAU:
        report.add("taylor.angle", f"sigma_01 must lie in [0, 2*pi), got {s.sigma01}")
    return report


@dataclass(frozen=True)
class WeightFamily:
    """Summable weights b_n > 0 with sum(n * b_n) finite (linear summability)."""

    kind: str
    ratio: Optional[Fraction] = None   # geometric
    exponent: Optional[int] = None     # power

    def weight(self, n: int) -> Fraction:
        if self.kind == "geometric":
            return self.ratio ** n
        return Fraction(1, (n + 1) ** self.exponent)

    def total_weight(self) -> Union[Fraction, float]:
        """sum over n >= 0 of (n + 1) * b_n, the scale of any capped distance."""
        if self.kind == "geometric":
            return 1 / (1 - self.ratio) ** 2
        e = self.exponent
        return float(zeta(e - 1, 1))

    def tail_weight(self, degree: int) -> Union[Fraction, float]:
        """sum over n > degree of (n + 1) * b_n; exact for geometric weights."""
        d = degree
        if self.kind == "geometric":
            r = self.ratio
            return r ** (d + 1) * ((d + 2) - (d + 1) * r) / (1 - r) ** 2
        # sum_{n > d} (n+1)^(1-e) = Hurwitz zeta(e-1, d+2)
        return float(zeta(self.exponent - 1, d + 2))


def geometric_weights(ratio) -> WeightFamily:
    ratio = Fraction(ratio)
    if not 0 < ratio < 1:
        raise ValueError("geometric ratio must satisfy 0 < r < 1")
    return WeightFamily("geometric", ratio=ratio)


def power_weights(exponent: int) -> WeightFamily:
    if not (isinstance(exponent, int) and exponent >= 3):
        raise ValueError("power weight exponent must be an integer >= 3")
    return WeightFamily("power", exponent=exponent)


def weights_from_spec(spec: dict) -> WeightFamily:
    kind = spec.get("type")
    if kind == "geometric":
        return geometric_weights(spec["ratio"])
    if kind == "power":
        return power_weights(spec["exponent"])
    raise ValueError(f"unknown weight family: {kind!r}")


def weights_spec(bn: WeightFamily) -> dict:
    if bn.kind == "geometric":
        return {"type": "geometric", "ratio": str(bn.ratio)}
    return {"type": "power", "exponent": bn.exponent}


def taylor_distance_general(s1: TaylorSeries2, s2: TaylorSeries2,
                            bn: WeightFamily) -> float:
    """sum over the union support of min(|sigma - sigma'|, b_{i+j})."""
    total = 0.0
    for i, j in s1.support() | s2.support():
        delta = abs(s1.coefficient(i, j) - s2.coefficient(i, j))
        total += float(min(delta, bn.weight(i + j)))
    return total


def taylor_distance_semitoric(s1: TaylorSeries2, s2: TaylorSeries2,
                              bn: WeightFamily) -> float:
    """The general distance with the (0,1) term compared modulo 2*pi.

    Both series must be normalized (sigma_00 = 0, sigma_01 in [0, 2*pi)).
    """
    for s in (s1, s2):
        rep = validate_series(s)
        if not rep.ok:
            raise NormalizationError("; ".join(v.message for v in rep.violations))
    total = 0.0
    for i, j in (s1.support() | s2.support()) - {(0, 1)}:
        delta = abs(s1.coefficient(i, j) - s2.coefficient(i, j))
        total += float(min(delta, bn.weight(i + j)))
    delta01 = abs(s1.sigma01 - s2.sigma01)
    total += float(min(delta01, TAU - delta01, bn.weight(1)))
    return total


def tail_bound(bn: WeightFamily, degree: int) -> float:
    """Upper bound on the distance contribution of all terms of degree > degree."""
    return float(bn.tail_weight(degree))
