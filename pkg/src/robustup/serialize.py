"""JSON instance files with exact rational strings."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .errors import DegenerateInputError, InstanceParseError
from .lds import Instance, Mode

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(token: Any, path: str) -> Fraction:
    """``"p/q"`` or ``"p"`` (string) or a JSON integer; anything float-like is refused."""
    if isinstance(token, bool):
        raise InstanceParseError(path, "booleans are not rationals")
    if isinstance(token, int):
        return Fraction(token)
    if not isinstance(token, str):
        raise InstanceParseError(path, f"expected a rational string, got {type(token).__name__}")
    if not _RATIONAL.fullmatch(token):
        raise InstanceParseError(path, f"malformed rational {token!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise InstanceParseError(path, "zero denominator")
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def instance_from_dict(obj: Any, path: str = "$") -> Instance:
    if not isinstance(obj, dict):
        raise InstanceParseError(path, "expected an object")
    for key in ("mode", "coefficients", "initial"):
        if key not in obj:
            raise InstanceParseError(f"{path}.{key}", "missing field")
    extra = set(obj) - {"mode", "coefficients", "initial"}
    if extra:
        raise InstanceParseError(f"{path}.{sorted(extra)[0]}", "unknown field")
    try:
        mode = Mode(obj["mode"])
    except ValueError:
        raise InstanceParseError(f"{path}.mode", f"unknown mode {obj['mode']!r}") from None
    vectors = {}
    for key in ("coefficients", "initial"):
        arr = obj[key]
        if not isinstance(arr, list):
            raise InstanceParseError(f"{path}.{key}", "expected an array")
        if not arr:
            raise InstanceParseError(f"{path}.{key}", "must be nonempty")
        vectors[key] = [parse_rational(t, f"{path}.{key}[{i}]") for i, t in enumerate(arr)]
    if len(vectors["coefficients"]) != len(vectors["initial"]):
        raise InstanceParseError(f"{path}.initial", "length differs from coefficients")
    try:
        return Instance(mode, tuple(vectors["coefficients"]), tuple(vectors["initial"]))
    except DegenerateInputError as exc:
        raise InstanceParseError(path, str(exc)) from None


def parse_instance(text: str) -> Instance:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceParseError("$", f"malformed JSON: {exc.msg}") from None
    return instance_from_dict(obj)


def instance_to_dict(inst: Instance) -> dict:
    return {
        "mode": inst.mode.value,
        "coefficients": [format_rational(x) for x in inst.c],
        "initial": [format_rational(x) for x in inst.v],
    }


def format_instance(inst: Instance) -> str:
    """Canonical one-line JSON; ``parse_instance`` inverts it."""
    return json.dumps(instance_to_dict(inst), separators=(",", ":"))
