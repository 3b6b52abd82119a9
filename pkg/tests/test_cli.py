"""File format round trips and the command-line surface."""

import json
import math
from fractions import Fraction

import pytest

from semitoric.cli import main
from semitoric.completion import GeneralizedIngredients, GeneralizedMarker
from semitoric.invariants import Marker, SemitoricIngredients
from semitoric.io import (
    InputFormatError,
    dumps,
    format_rational,
    ingredients_from_dict,
    ingredients_to_dict,
    parse_rational,
    region_to_dict,
    taylor_from_dict,
    taylor_to_dict,
)
from semitoric.polygon import polygon_from_vertices, to_vertical_region
from semitoric.taylor import ZERO_SERIES, TaylorSeries2

F = Fraction
INF = float("inf")


def trapezoid_system(k=0, h=F(1, 2), taylor=ZERO_SERIES):
    p = polygon_from_vertices([(0, 0), (2, 0), (1, 1), (0, 1)])
    return SemitoricIngredients(p, (Marker(F(1), k, h, taylor),))


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc) if isinstance(doc, dict) else doc)
    return str(path)


def trap_doc(**overrides):
    doc = {
        "mf": 1,
        "polygon": {"vertices": [["0", "0"], ["2", "0"], ["1", "1"], ["0", "1"]]},
        "markers": [{"lambda": "1", "k": 0, "h": "1/2",
                     "taylor": {"sigma01": 0.25, "terms": [[2, 0, 1.5]]}}],
    }
    doc.update(overrides)
    return doc


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# Rationals and serialization


def test_parse_rational():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("-7") == F(-7)
    assert parse_rational(5) == F(5)
    assert parse_rational("inf", allow_inf=True) == INF
    with pytest.raises(InputFormatError):
        parse_rational("inf")
    with pytest.raises(InputFormatError):
        parse_rational("a/b")
    with pytest.raises(InputFormatError):
        parse_rational("1/0")


def test_format_rational():
    assert format_rational(F(3, 4)) == "3/4"
    assert format_rational(F(5)) == "5"
    assert format_rational(INF) == "inf"
    with pytest.raises(InputFormatError):
        format_rational(0.5)


def test_dumps_float_precision():
    text = dumps({"x": 0.1, "f": F(1, 3), "n": 7, "ok": True, "none": None})
    parsed = json.loads(text)
    assert parsed["x"] == 0.1
    assert parsed["f"] == "1/3"
    assert parsed["n"] == 7 and parsed["ok"] is True and parsed["none"] is None
    # 17 significant digits survive a round trip for any double
    tricky = 1.0 / 3.0 + 1e-16
    assert json.loads(dumps({"v": tricky}))["v"] == tricky


def test_taylor_document_round_trip():
    s = TaylorSeries2.of(1.25, [(2, 0, 0.5), (1, 1, -2.0), (0, 3, 1e-9)])
    doc = json.loads(dumps(taylor_to_dict(s)))
    assert taylor_from_dict(doc) == s


def test_ingredients_round_trip_strict():
    m = trapezoid_system(k=3, h=F(2, 5),
                         taylor=TaylorSeries2.of(0.125, [(3, 1, -0.75)]))
    doc = json.loads(dumps(ingredients_to_dict(m)))
    m2 = ingredients_from_dict(doc)
    assert isinstance(m2, SemitoricIngredients)
    assert m2 == m
    # parse -> serialize -> parse is the identity on the canonical form
    assert ingredients_to_dict(m2) == json.loads(dumps(ingredients_to_dict(m)))


def test_ingredients_round_trip_generalized():
    g = GeneralizedIngredients(
        polygon_from_vertices([(-2, 0), (2, 0), (2, 1), (0, 3), (-2, 1)]),
        (GeneralizedMarker(F(0), 0, F(1, 3), ZERO_SERIES),
         GeneralizedMarker(F(0), 0, F(2, 3), ZERO_SERIES)))
    doc = json.loads(dumps(ingredients_to_dict(g)))
    assert doc["generalized"] is True
    g2 = ingredients_from_dict(doc)
    assert isinstance(g2, GeneralizedIngredients)
    assert g2 == g


def test_float_h_round_trip():
    m = trapezoid_system(h=0.4375)
    m2 = ingredients_from_dict(json.loads(dumps(ingredients_to_dict(m))))
    assert m2.markers[0].h == 0.4375
    assert isinstance(m2.markers[0].h, float)


def test_schema_rejections():
    with pytest.raises(InputFormatError):
        ingredients_from_dict(trap_doc(mf=2))  # marker count mismatch
    bad = trap_doc()
    del bad["markers"]
    with pytest.raises(InputFormatError):
        ingredients_from_dict(bad)
    with pytest.raises(InputFormatError):
        ingredients_from_dict(trap_doc(polygon={"vertices": [["0", "0"]]}))
    with pytest.raises(InputFormatError):
        ingredients_from_dict(trap_doc(polygon={}))
    # decimal strings are not exact-rational syntax
    doc = trap_doc()
    doc["markers"][0]["lambda"] = "0.5"
    with pytest.raises(InputFormatError):
        ingredients_from_dict(doc)
    # inf marker positions need the generalized flag
    doc = trap_doc()
    doc["markers"][0]["lambda"] = "inf"
    with pytest.raises(InputFormatError):
        ingredients_from_dict(doc)
    doc["generalized"] = True
    assert ingredients_from_dict(doc).markers[0].lam == INF


def test_region_document():
    region = to_vertical_region(
        polygon_from_vertices([(0, 0), (2, 0), (1, 1), (0, 1)]))
    doc = region_to_dict(region)
    assert doc["empty"] is False
    assert doc["x_lo"] == "0" and doc["x_hi"] == "2"
    assert doc["top"][0] == {"from": "0", "to": "1",
                             "slope": "0", "intercept": "1"}


# ---------------------------------------------------------------------------
# CLI commands


def test_validate_ok(tmp_path, capsys):
    path = write(tmp_path, "trap.json", trap_doc())
    code, out, _ = run(capsys, "validate", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True and doc["violations"] == []
    assert doc["config"]["measure"] == {"type": "nu0"}
    assert doc["config"]["h_mode"] == "raw"


def test_validate_semantic_failure_exits_one(tmp_path, capsys):
    doc = trap_doc()
    doc["markers"][0]["h"] = "7/2"  # outside the slice
    path = write(tmp_path, "bad_h.json", doc)
    code, out, _ = run(capsys, "validate", path)
    assert code == 1
    codes = {v["code"] for v in json.loads(out)["violations"]}
    assert "marker1.h" in codes


def test_malformed_inputs_exit_two(tmp_path, capsys):
    code, _, err = run(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == 2 and "error" in err
    path = write(tmp_path, "nonsense.json", "{not json")
    code, _, err = run(capsys, "validate", path)
    assert code == 2
    path = write(tmp_path, "schema.json", {"mf": 0})
    code, _, err = run(capsys, "validate", path)
    assert code == 2


def test_bad_flag_values_exit_two(tmp_path, capsys):
    path = write(tmp_path, "trap.json", trap_doc())
    with pytest.raises(SystemExit) as exc:
        main(["dist", path, path, "--measure", "power_tail:2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["dist", path, path, "--bn", "geometric:2"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_dist_self_is_zero(tmp_path, capsys):
    path = write(tmp_path, "trap.json", trap_doc())
    code, out, _ = run(capsys, "dist", path, path)
    assert code == 0
    doc = json.loads(out)
    assert doc["distance"] == 0
    assert doc["polygon_part_exact"] == "0"
    assert doc["permutation"] == [0] and doc["c"] == 0
    assert doc["comparable"] is True
    assert 0 < doc["tail_bound"] < 0.08


def test_dist_gauge_pair_is_zero(tmp_path, capsys):
    from semitoric.invariants import shifted_representative

    m = trapezoid_system(k=2)
    shifted = shifted_representative(m, 1)
    a = write(tmp_path, "a.json", ingredients_to_dict(m))
    b = write(tmp_path, "b.json", ingredients_to_dict(shifted))
    code, out, _ = run(capsys, "dist", a, b)
    assert code == 0
    doc = json.loads(out)
    assert doc["distance"] == 0 and doc["c"] == 1


def test_dist_mf_mismatch_is_one(tmp_path, capsys):
    a = write(tmp_path, "a.json", trap_doc())
    square = {
        "mf": 0,
        "polygon": {"vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]},
        "markers": [],
    }
    b = write(tmp_path, "b.json", square)
    code, out, _ = run(capsys, "dist", a, b)
    assert code == 0
    doc = json.loads(out)
    assert doc["distance"] == 1 and doc["comparable"] is False
    assert doc["polygon_part_exact"] is None and doc["permutation"] is None


def test_dist_alignment_and_h_mode_flags(tmp_path, capsys):
    from tests.test_metric import crossing_pair

    a, b = crossing_pair(F(1, 8))
    pa = write(tmp_path, "a.json", ingredients_to_dict(a))
    pb = write(tmp_path, "b.json", ingredients_to_dict(b))
    code, out, _ = run(capsys, "dist", pa, pb)
    doc_min = json.loads(out)
    code, out, _ = run(capsys, "dist", pa, pb, "--alignment", "id")
    doc_id = json.loads(out)
    assert doc_min["permutation"] == [1, 0]
    assert doc_id["permutation"] == [0, 1]
    assert 0.2 <= doc_min["distance"] <= doc_id["distance"]
    code, out, _ = run(capsys, "dist", pa, pb, "--h-mode", "normalized")
    assert code == 0
    assert json.loads(out)["config"]["h_mode"] == "normalized"


def test_dist_alternate_measure_and_weights(tmp_path, capsys):
    path = write(tmp_path, "trap.json", trap_doc())
    code, out, _ = run(capsys, "dist", path, path,
                       "--measure", "power_tail:4", "--bn", "power:3")
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["measure"] == {"type": "power_tail", "s": "4"}
    assert doc["config"]["weights"] == {"type": "power", "exponent": 3}
    assert doc["distance"] == 0


def test_dist_truncation_drops_high_degree(tmp_path, capsys):
    high = trap_doc()
    high["markers"][0]["taylor"] = {"sigma01": 0.25, "terms": [[20, 0, 5.0]]}
    a = write(tmp_path, "a.json", high)
    base = trap_doc()
    base["markers"][0]["taylor"] = {"sigma01": 0.25, "terms": []}
    b = write(tmp_path, "b.json", base)
    code, out, _ = run(capsys, "dist", a, b)
    assert json.loads(out)["distance"] == 0  # degree 20 > default cutoff 12
    code, out, _ = run(capsys, "dist", a, b, "--truncation", "25")
    doc = json.loads(out)
    assert doc["distance"] == pytest.approx(0.5 ** 20)
    assert doc["config"]["truncation"] == 25


def test_taylordist(tmp_path, capsys):
    a = write(tmp_path, "a.json", {"sigma01": 0.2, "terms": []})
    b = write(tmp_path, "b.json", {"sigma01": 0.0, "terms": [[1, 1, 9.0]]})
    code, out, _ = run(capsys, "taylordist", a, b)
    assert code == 0
    doc = json.loads(out)
    # 0.2 angle gap plus the capped (1,1) term: b_2 = 1/4
    assert doc["distance"] == pytest.approx(0.2 + 0.25)
    assert "tail_bound" in doc


def test_corners_command(tmp_path, capsys):
    path = write(tmp_path, "trap.json", trap_doc())
    code, out, _ = run(capsys, "corners", path)
    assert code == 0
    listed = {tuple(c["point"]): c["type"] for c in json.loads(out)["corners"]}
    assert listed[("1", "1")] == "fake"
    assert listed[("0", "0")] == "delzant"


def test_orbit_command(tmp_path, capsys):
    path = write(tmp_path, "trap.json", trap_doc())
    code, out, _ = run(capsys, "orbit", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["mf"] == 1
    assert [r["u"] for r in doc["regions"]] == [[0], [1]]
    measures = {r["measure"] for r in doc["regions"]}
    assert len(measures) == 1  # shears preserve the measure


def test_orbit_plot(tmp_path, capsys):
    pytest.importorskip("matplotlib")
    path = write(tmp_path, "trap.json", trap_doc())
    target = tmp_path / "orbit.svg"
    code, _, _ = run(capsys, "orbit", path, "--plot", str(target))
    assert code == 0
    assert target.exists() and target.stat().st_size > 0


def test_cauchy_command(tmp_path, capsys):
    path = write(tmp_path, "trap.json", trap_doc())
    code, out, _ = run(capsys, "cauchy", path, path, path, "--eps", "0.01")
    assert code == 0
    doc = json.loads(out)
    assert doc["consistent_with_cauchy"] is True
    assert doc["successive_distances"] == [0, 0]
    square = {
        "mf": 0,
        "polygon": {"vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]},
        "markers": [],
    }
    other = write(tmp_path, "sq.json", square)
    code, out, _ = run(capsys, "cauchy", path, other, path, "--eps", "0.5")
    assert code == 0
    assert json.loads(out)["consistent_with_cauchy"] is False
    code, _, err = run(capsys, "cauchy", path, "--eps", "0.5")
    assert code == 2


def test_canonical_command(tmp_path, capsys):
    doc = {
        "mf": 2,
        "generalized": True,
        "polygon": {"vertices": [["-2", "0"], ["2", "0"], ["2", "1"],
                                 ["0", "3"], ["-2", "1"]]},
        "markers": [
            {"lambda": "0", "k": 0, "h": 0.7, "taylor": {"sigma01": 0.0}},
            {"lambda": "0", "k": 0, "h": 0.3, "taylor": {"sigma01": 0.0}},
        ],
    }
    path = write(tmp_path, "collided.json", doc)
    code, out, _ = run(capsys, "canonical", path)
    assert code == 0
    ordered = json.loads(out)
    assert [mk["h"] for mk in ordered["markers"]] == [0.3, 0.7]
