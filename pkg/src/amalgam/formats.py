"""Function-file JSON and the space-spec string grammar."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, List

from .amalgams import WL, Integrable, SpaceSpec, Wiener
from .errors import InvalidSpec
from .extreal import INF, fraction_str
from .norms import Lebesgue, Lorentz, exponent
from .stepfn import PPF, Piece, normalize

_PIECE_KEYS = {"a", "b", "c", "alpha"}


def _rational(value: Any, field: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InvalidSpec(f"{field}: rationals are written as strings or integers")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise InvalidSpec(f"{field}: not a rational: {value!r}") from None


def function_from_json(doc: Any) -> PPF:
    if not isinstance(doc, dict) or set(doc) != {"pieces"} or not isinstance(doc["pieces"], list):
        raise InvalidSpec('function file must be {"pieces": [...]}')
    raw = []
    for i, item in enumerate(doc["pieces"]):
        if not isinstance(item, dict):
            raise InvalidSpec(f"piece {i} is not an object")
        unknown = set(item) - _PIECE_KEYS
        if unknown:
            raise InvalidSpec(f"piece {i}: unknown keys {sorted(unknown)}")
        if not {"a", "b", "c"} <= set(item):
            raise InvalidSpec(f"piece {i}: a, b and c are required")
        b = item["b"]
        b = INF if b == "inf" else _rational(b, f"piece {i}.b")
        raw.append(Piece(_rational(item["a"], f"piece {i}.a"), b,
                         _rational(item["c"], f"piece {i}.c"),
                         _rational(item.get("alpha", "0"), f"piece {i}.alpha")))
    return normalize(raw)


def function_to_json(f: PPF) -> dict:
    return {"pieces": [{"a": fraction_str(p.a),
                        "b": "inf" if p.b == INF else fraction_str(p.b),
                        "c": fraction_str(p.c),
                        "alpha": fraction_str(p.alpha)} for p in f.pieces]}


def load_function(path: str) -> PPF:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidSpec(f"{path}: invalid JSON ({exc.msg})") from None
    return function_from_json(doc)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True)


# -- spec grammar ------------------------------------------------------------
#   spec   := "L" ":" exp | "Lorentz" ":" exp ":" exp | "W" ":" exp ":" exp
#           | "WL" ":" simple ":" simple | "Int" ":" (simple | wl)

class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: List[str] = [t.strip() for t in text.split(":")]
        self.pos = 0

    def take(self) -> str:
        if self.pos >= len(self.items):
            raise InvalidSpec(f"spec {self.text!r} ends early")
        tok = self.items[self.pos]
        self.pos += 1
        return tok

    def exponent(self):
        tok = self.take()
        try:
            return exponent(tok)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidSpec(f"bad exponent {tok!r} in {self.text!r}: {exc}") from None


def _simple(tokens: _Tokens):
    head = tokens.take()
    if head == "L":
        return Lebesgue(tokens.exponent())
    if head == "Lorentz":
        p = tokens.exponent()
        return Lorentz(p, tokens.exponent())
    raise InvalidSpec(f"expected L or Lorentz in {tokens.text!r}, got {head!r}")


def _spec(tokens: _Tokens, depth: int = 0) -> SpaceSpec:
    head = tokens.items[tokens.pos] if tokens.pos < len(tokens.items) else ""
    if head == "WL":
        tokens.take()
        local = _simple(tokens)
        return WL(local, _simple(tokens))
    if head == "W":
        tokens.take()
        p = tokens.exponent()
        return Wiener(p, tokens.exponent())
    if head == "Int":
        if depth:
            raise InvalidSpec("Int cannot be nested")
        tokens.take()
        inner = _spec(tokens, depth + 1)
        return Integrable(inner)
    return _simple(tokens)


def parse_spec(text: str) -> SpaceSpec:
    tokens = _Tokens(text)
    spec = _spec(tokens)
    if tokens.pos != len(tokens.items):
        raise InvalidSpec(f"trailing tokens in spec {text!r}")
    return spec
