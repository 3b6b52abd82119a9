"""File formats: exact rationals as strings, schema checks, JSON emission.

Rationals serialize as "p/q" strings (or "p" for integers) and parse back
exactly; the marker position additionally accepts "inf".  Floats are
emitted with 17 significant digits so values survive a round trip.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Union

import jsonschema

from .completion import GeneralizedIngredients, GeneralizedMarker
from .invariants import Marker, SemitoricIngredients
from .polygon import (
    POS_INF,
    ConvexPolygonalSet,
    HalfPlane,
    VerticalRegion,
    _is_finite,
    polygon_from_halfplanes,
    polygon_from_vertices,
)
from .taylor import TaylorSeries2


class InputFormatError(ValueError):
    """Malformed document or value; callers map this to exit code 2."""


# ---------------------------------------------------------------------------
# Rationals


def parse_rational(text: Union[str, int], allow_inf: bool = False):
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if isinstance(text, str):
        if text.strip() in ("inf", "+inf"):
            if allow_inf:
                return POS_INF
            raise InputFormatError("inf is not allowed here")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"not an exact rational: {text!r}") from exc
    raise InputFormatError(f"expected a rational string, got {type(text).__name__}")


def format_rational(x) -> str:
    if isinstance(x, float):
        if x == POS_INF:
            return "inf"
        raise InputFormatError(f"not representable exactly: {x!r}")
    return str(Fraction(x))


def _parse_h(value) -> Union[Fraction, float]:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        if not math.isfinite(value):
            raise InputFormatError("h must be finite")
        return Fraction(value) if isinstance(value, int) else float(value)
    raise InputFormatError("h must be a rational string or a number")


# ---------------------------------------------------------------------------
# Schema

_RATIONAL = {"type": "string", "pattern": r"^[+-]?[0-9]+(/[1-9][0-9]*)?$"}
_LAMBDA = {"type": "string", "pattern": r"^([+-]?[0-9]+(/[1-9][0-9]*)?|inf)$"}
_H = {"oneOf": [_RATIONAL, {"type": "number"}]}
_TRIPLE = {"type": "array", "items": _RATIONAL, "minItems": 3, "maxItems": 3}
_PAIR = {"type": "array", "items": _RATIONAL, "minItems": 2, "maxItems": 2}

_TAYLOR = {
    "type": "object",
    "required": ["sigma01"],
    "additionalProperties": False,
    "properties": {
        "sigma01": {"type": "number"},
        "terms": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [
                    {"type": "integer", "minimum": 0},
                    {"type": "integer", "minimum": 0},
                    {"type": "number"},
                ],
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
}

_MARKER = {
    "type": "object",
    "required": ["lambda", "k", "h", "taylor"],
    "additionalProperties": False,
    "properties": {
        "lambda": _LAMBDA,
        "k": {"type": "integer"},
        "h": _H,
        "taylor": _TAYLOR,
    },
}

INGREDIENTS_SCHEMA = {
    "type": "object",
    "required": ["mf", "polygon", "markers"],
    "additionalProperties": False,
    "properties": {
        "mf": {"type": "integer", "minimum": 0},
        "generalized": {"type": "boolean"},
        "polygon": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "halfplanes": {"type": "array", "items": _TRIPLE},
                "vertices": {"type": "array", "items": _PAIR, "minItems": 3},
            },
            "oneOf": [{"required": ["halfplanes"]}, {"required": ["vertices"]}],
        },
        "markers": {"type": "array", "items": _MARKER},
    },
}


def _check_schema(doc: Any, schema: dict, label: str) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        raise InputFormatError(f"{label}: {exc.message}") from exc


# ---------------------------------------------------------------------------
# Taylor series documents


def taylor_from_dict(doc: Any) -> TaylorSeries2:
    _check_schema(doc, _TAYLOR, "taylor")
    try:
        return TaylorSeries2.of(doc["sigma01"],
                                [(i, j, c) for i, j, c in doc.get("terms", ())])
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def taylor_to_dict(s: TaylorSeries2) -> dict:
    terms = sorted((k, c) for k, c in s.coeffs.items() if k != (0, 1))
    return {"sigma01": s.sigma01,
            "terms": [[i, j, c] for (i, j), c in terms]}


# ---------------------------------------------------------------------------
# Ingredient documents


def _polygon_from_doc(doc: dict) -> ConvexPolygonalSet:
    try:
        if "halfplanes" in doc:
            return polygon_from_halfplanes(
                HalfPlane.of(*(parse_rational(v) for v in triple))
                for triple in doc["halfplanes"])
        return polygon_from_vertices(
            (parse_rational(x), parse_rational(y)) for x, y in doc["vertices"])
    except InputFormatError:
        raise
    except ValueError as exc:
        raise InputFormatError(f"polygon: {exc}") from exc


def ingredients_from_dict(doc: Any) -> Union[SemitoricIngredients, GeneralizedIngredients]:
    """Build the typed ingredient list from a parsed JSON document."""
    _check_schema(doc, INGREDIENTS_SCHEMA, "ingredients")
    if doc["mf"] != len(doc["markers"]):
        raise InputFormatError(
            f"mf={doc['mf']} does not match {len(doc['markers'])} markers")
    generalized = bool(doc.get("generalized", False))
    polygon = _polygon_from_doc(doc["polygon"])
    markers = []
    for entry in doc["markers"]:
        lam = parse_rational(entry["lambda"], allow_inf=generalized)
        h = _parse_h(entry["h"])
        taylor = taylor_from_dict(entry["taylor"])
        if generalized:
            markers.append(GeneralizedMarker(lam, entry["k"], h, taylor))
        else:
            markers.append(Marker(lam, entry["k"], h, taylor))
    if generalized:
        return GeneralizedIngredients(polygon, tuple(markers))
    return SemitoricIngredients(polygon, tuple(markers))


def ingredients_to_dict(m: Union[SemitoricIngredients, GeneralizedIngredients]) -> dict:
    """Canonical document form: half-plane polygon, rationals as strings."""
    generalized = isinstance(m, GeneralizedIngredients)
    markers = []
    for mk in m.markers:
        h = mk.h_tilde if generalized else mk.h
        markers.append({
            "lambda": format_rational(mk.lam),
            "k": mk.k,
            "h": h if isinstance(h, float) else format_rational(h),
            "taylor": taylor_to_dict(mk.taylor),
        })
    return {
        "mf": m.mf,
        "generalized": generalized,
        "polygon": {"halfplanes": [
            [format_rational(h.a), format_rational(h.b), format_rational(h.c)]
            for h in m.polygon.halfplanes]},
        "markers": markers,
    }


def load_ingredients(path: str) -> Union[SemitoricIngredients, GeneralizedIngredients]:
    return ingredients_from_dict(load_json(path))


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: invalid JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# Region documents (orbit output)


def _endpoint(x) -> Union[str, None]:
    if not _is_finite(x):
        return "inf" if x > 0 else "-inf"
    return format_rational(x)


def _fn_to_doc(fn) -> list:
    return [{"from": _endpoint(x0), "to": _endpoint(x1),
             "slope": format_rational(s), "intercept": format_rational(t)}
            for x0, x1, s, t in fn.pieces()]


def region_to_dict(region: VerticalRegion) -> dict:
    if region.is_empty:
        return {"empty": True}
    return {
        "empty": False,
        "x_lo": _endpoint(region.x_lo),
        "x_hi": _endpoint(region.x_hi),
        "bottom": _fn_to_doc(region.bottom),
        "top": _fn_to_doc(region.top),
    }


# ---------------------------------------------------------------------------
# JSON emission: floats at 17 significant digits


def _format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise InputFormatError(f"non-finite float in output: {x!r}")
    return format(x, ".17g")


def dumps(obj: Any, indent: int = 2) -> str:
    """JSON text; Fractions become "p/q" strings, floats get 17 digits."""
    return _emit(obj, indent, 0) + "\n"


def _emit(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    close = " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = (f'{pad}{json.dumps(str(k))}: {_emit(v, indent, level + 1)}'
                 for k, v in obj.items())
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = (f"{pad}{_emit(v, indent, level + 1)}" for v in obj)
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, Fraction):
        return json.dumps(format_rational(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")
