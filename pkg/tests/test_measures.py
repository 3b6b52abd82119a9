import math
import random
from fractions import Fraction as F

import pytest
from scipy.integrate import quad

from semitoric import polygon_from_halfplanes, polygon_from_vertices, to_vertical_region, vertical_shear
from semitoric.measures import (
    lebesgue_area,
    measure_from_spec,
    nu0,
    power_tail,
    rational_decay,
    region_measure,
    symmetric_difference_measure,
    validate_admissible,
)

INF = math.inf


def region(*pts):
    return to_vertical_region(polygon_from_vertices(pts))


def box(x0, x1, y0=0, y1=1):
    return to_vertical_region(polygon_from_halfplanes(
        [(-1, 0, -F(x0)), (1, 0, F(x1)), (0, -1, -F(y0)), (0, 1, F(y1))]))


def halfstrip(x0=1, top_slope=1, top_int=0):
    # x >= x0, 0 <= y <= top_slope*x + top_int
    return to_vertical_region(polygon_from_halfplanes(
        [(-1, 0, -F(x0)), (0, -1, 0), (-F(top_slope), 1, F(top_int))]))


# independent float densities for quadrature cross-checks
def g_nu0(x):
    return 1.0 if abs(x) < 1 else abs(x) ** -3.0


def g_power(s):
    return lambda x: 1.0 if abs(x) < 1 else abs(x) ** -float(s)


def g_rational(q):
    return lambda x: (1.0 + abs(x)) ** -float(q)


def test_nu0_unit_square():
    assert region_measure(nu0(), box(0, 1)) == 1


def test_nu0_shifted_square():
    assert region_measure(nu0(), box(1, 2)) == F(3, 8)


def test_nu0_unbounded_wedge():
    # x >= 1, 0 <= y <= x has nu0 measure exactly 1
    assert region_measure(nu0(), halfstrip()) == 1


def test_nu0_straddles_breakpoints():
    # [-2, 2] x [0, 1]: 2 inside + 2 * (1/2 - 1/8) tails
    assert region_measure(nu0(), box(-2, 2)) == 2 + 2 * (F(1, 2) - F(1, 8))


def test_power_tail_values():
    nu = power_tail(4)
    # x >= 1 wedge under y = x: integral of x^-3 from 1 to inf
    assert region_measure(nu, halfstrip()) == F(1, 2)
    assert region_measure(nu, box(0, 1)) == 1


def test_power_tail_rejects_bad_exponent():
    with pytest.raises(ValueError):
        power_tail(2)
    with pytest.raises(ValueError):
        power_tail(F(7, 2))


def test_rational_decay_whole_strip():
    # strip [0, inf) x [0, 1] under (1+x)^-3: integral = 1/2
    r = to_vertical_region(polygon_from_halfplanes([(-1, 0, 0), (0, -1, 0), (0, 1, 1)]))
    assert region_measure(rational_decay(3), r) == F(1, 2)


def test_validate_admissible():
    assert validate_admissible({"type": "nu0"}).ok
    assert validate_admissible({"type": "power_tail", "s": F(3)}).ok
    rep = validate_admissible({"type": "power_tail", "s": F(2)})
    assert not rep.ok and any(v.code == "measure.integrability" for v in rep.violations)
    rep = validate_admissible({"type": "power_tail", "s": F(5, 2)})
    assert not rep.ok and any(v.code == "measure.exactness" for v in rep.violations)
    assert not validate_admissible({"type": "gaussian"}).ok


def test_measure_from_spec_roundtrip():
    nu = measure_from_spec({"type": "power_tail", "s": 4})
    assert nu.spec() == {"type": "power_tail", "s": "4"}
    assert measure_from_spec({"type": "nu0"}).spec() == {"type": "nu0"}


@pytest.mark.parametrize("nu,g", [
    (nu0(), g_nu0),
    (power_tail(3), g_power(3)),
    (power_tail(4), g_power(4)),
    (rational_decay(3), g_rational(3)),
])
def test_quadrature_cross_check_compact(nu, g):
    r = region((-3, 0), (4, 0), (2, 2), (-1, 1))
    exact = float(region_measure(nu, r))
    top, bottom = r.top, r.bottom

    def height(x):
        xf = F(x).limit_denominator(10 ** 12)
        return float(top(xf) - bottom(xf))

    pts = sorted({-3.0, -1.0, 0.0, 1.0, 4.0} | set(map(float, top.breaks)) | set(map(float, bottom.breaks)))
    num = 0.0
    for a, b in zip(pts, pts[1:]):
        val, _ = quad(lambda x: g(x) * height(x), a, b, limit=200)
        num += val
    assert abs(exact - num) < 1e-9


@pytest.mark.parametrize("nu,g", [
    (nu0(), g_nu0),
    (power_tail(4), g_power(4)),
])
def test_quadrature_cross_check_unbounded(nu, g):
    r = halfstrip(1, 1, 2)
    exact = float(region_measure(nu, r))
    val, _ = quad(lambda x: g(x) * (x + 2.0), 1.0, INF, limit=200)
    assert abs(exact - val) < 1e-9


def test_lebesgue_area_matches_shoelace():
    rng = random.Random(3)
    for _ in range(30):
        pts = [(F(rng.randint(-5, 5)), F(rng.randint(-5, 5))) for _ in range(6)]
        try:
            p = polygon_from_vertices(pts)
        except ValueError:
            continue
        verts = [v.point for v in p.vertices]
        shoelace = sum(a[0] * b[1] - b[0] * a[1]
                       for a, b in zip(verts, verts[1:] + verts[:1])) / 2
        assert lebesgue_area(to_vertical_region(p)) == shoelace


def test_lebesgue_area_unbounded_errors():
    with pytest.raises(ValueError):
        lebesgue_area(halfstrip())


def test_shear_invariance_exact():
    rng = random.Random(5)
    nus = [nu0(), power_tail(3), rational_decay(4)]
    for _ in range(50):
        pts = [(F(rng.randint(-4, 4)), F(rng.randint(-4, 4))) for _ in range(5)]
        try:
            r = to_vertical_region(polygon_from_vertices(pts))
        except ValueError:
            continue
        lam = F(rng.randint(-3, 3), rng.randint(1, 4))
        k = rng.randint(-3, 3)
        nu = rng.choice(nus)
        assert region_measure(nu, vertical_shear(r, lam, k)) == region_measure(nu, r)


def test_translation_invariance_exact():
    rng = random.Random(6)
    nu = nu0()
    for _ in range(30):
        pts = [(F(rng.randint(-4, 4)), F(rng.randint(-4, 4))) for _ in range(5)]
        try:
            r = to_vertical_region(polygon_from_vertices(pts))
        except ValueError:
            continue
        dy = F(rng.randint(-20, 20), rng.randint(1, 5))
        assert region_measure(nu, r.translated(dy)) == region_measure(nu, r)


def test_symmetric_difference_disjoint_squares():
    # [0,1]^2 and [2,3]x[0,1]: nu0 gives 1 + 5/72
    a, b = box(0, 1), box(2, 3)
    assert symmetric_difference_measure(nu0(), a, b) == 1 + F(5, 72)


def test_symmetric_difference_nested_and_self():
    big, small = box(0, 1, 0, 1), box(0, 1, 0, F(1, 2))
    nu = nu0()
    assert symmetric_difference_measure(nu, big, big) == 0
    assert symmetric_difference_measure(nu, big, small) == F(1, 2)


def test_symmetric_difference_empty_cases():
    from semitoric import VerticalRegion
    e = VerticalRegion.empty()
    assert symmetric_difference_measure(nu0(), e, e) == 0
    assert symmetric_difference_measure(nu0(), e, box(0, 1)) == 1


def test_symmetric_difference_crossing_boundaries():
    # two unit squares overlapping in [1/2, 1] x [0, 1]
    a, b = box(0, 1), box(F(1, 2), F(3, 2))
    # nu0: SD = measure([0,1/2]) + measure([1,3/2]) heights 1
    expect = F(1, 2) + (F(1, 2) - F(2, 9))
    assert symmetric_difference_measure(nu0(), a, b) == expect


def test_symmetric_difference_metric_properties_random():
    rng = random.Random(9)
    nus = [nu0(), power_tail(3)]
    regions = []
    while len(regions) < 12:
        pts = [(F(rng.randint(-4, 4)), F(rng.randint(-4, 4))) for _ in range(5)]
        try:
            regions.append(to_vertical_region(polygon_from_vertices(pts)))
        except ValueError:
            continue
    for nu in nus:
        for i in range(len(regions)):
            for j in range(len(regions)):
                dij = symmetric_difference_measure(nu, regions[i], regions[j])
                assert dij >= 0
                assert dij == symmetric_difference_measure(nu, regions[j], regions[i])
                if i == j:
                    assert dij == 0
        for i, j, k in [(0, 3, 7), (1, 4, 8), (2, 5, 9), (3, 6, 10), (0, 5, 11)]:
            dik = symmetric_difference_measure(nu, regions[i], regions[k])
            dij = symmetric_difference_measure(nu, regions[i], regions[j])
            djk = symmetric_difference_measure(nu, regions[j], regions[k])
            assert dik <= dij + djk


def test_symmetric_difference_vs_inclusion_exclusion():
    # |A s.d. B| = |A| + |B| - 2|A i. B| checked via halfplane intersection
    rng = random.Random(13)
    nu = nu0()
    for _ in range(25):
        pts1 = [(F(rng.randint(-4, 4)), F(rng.randint(-4, 4))) for _ in range(5)]
        pts2 = [(F(rng.randint(-4, 4)), F(rng.randint(-4, 4))) for _ in range(5)]
        try:
            p1 = polygon_from_vertices(pts1)
            p2 = polygon_from_vertices(pts2)
        except ValueError:
            continue
        inter = polygon_from_halfplanes(p1.halfplanes + p2.halfplanes)
        lhs = symmetric_difference_measure(nu, to_vertical_region(p1), to_vertical_region(p2))
        rhs = (region_measure(nu, to_vertical_region(p1))
               + region_measure(nu, to_vertical_region(p2))
               - 2 * region_measure(nu, to_vertical_region(inter)))
        assert lhs == rhs
