"""Canonical JSON encoding of the scalar types used across the package.

Floats round-trip exactly (json emits the shortest digits that recover
the binary64 value); complexes are ``{"re": ..., "im": ...}`` objects
and exact rationals are ``{"rational": "p/q"}``.  ``canonical_dumps``
fixes key order and separators so identical data gives identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

__all__ = ["scalar_to_json", "scalar_from_json", "canonical_dumps", "fmt17"]


def scalar_to_json(val):
    if isinstance(val, bool):
        raise TypeError("bool is not a numeric scalar")
    if isinstance(val, Fraction):
        return {"rational": f"{val.numerator}/{val.denominator}"}
    if isinstance(val, complex):
        return {"re": val.real, "im": val.imag}
    if isinstance(val, (int, float)):
        return val
    raise TypeError(f"cannot serialize scalar of type {type(val).__name__}")


def scalar_from_json(doc):
    if isinstance(doc, dict):
        if "rational" in doc:
            num, _, den = doc["rational"].partition("/")
            return Fraction(int(num), int(den or 1))
        return complex(doc["re"], doc["im"])
    return doc


def canonical_dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def fmt17(x) -> str:
    """Render a float (or complex) with 17 significant digits, enough to
    round-trip binary64 exactly."""
    if isinstance(x, complex):
        return f"{x.real:.17g}{x.imag:+.17g}j"
    return f"{float(x):.17g}"
