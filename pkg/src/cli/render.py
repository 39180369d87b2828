"""
Rendering of analysis results as canonical JSON or plain text
"""

import json
from fractions import Fraction
from typing import Any

from pydantic import BaseModel

from ..models.automaton import LassoWord
from ..models.queries import BuchiAutomaton
from ..models.rational import format_rational
from ..models.values import IntervalUnion

JSON_SEPARATORS = (",", ":")


def to_json_value(value: Any) -> Any:
    """Plain JSON data: rationals as strings, tuples as lists, None fields dropped"""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return value
    if isinstance(value, LassoWord):
        return {"prefix": list(value.prefix), "cycle": list(value.cycle)}
    if isinstance(value, IntervalUnion):
        return value.as_json()
    if isinstance(value, BuchiAutomaton):
        return {
            "states": list(value.states),
            "initial": value.initial,
            "alphabet": list(value.alphabet),
            "edges": [[e.source, e.letter, e.target] for e in value.edges],
            "accepting": list(value.accepting),
            "scc_of": dict(value.scc_of),
        }
    if hasattr(value, "as_json"):
        return value.as_json()
    if isinstance(value, BaseModel):
        return to_json_value(value.model_dump())
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items() if v is not None}
    if isinstance(value, (list, tuple)):
        return [to_json_value(v) for v in value]
    return value


def buchi_text(buchi: BuchiAutomaton) -> str:
    """Line format: ``state s``, ``initial s``, ``accepting s``, ``edge src letter dst``"""
    lines = [f"state {s}" for s in buchi.states]
    lines.append(f"initial {buchi.initial}")
    lines += [f"accepting {s}" for s in buchi.accepting]
    lines += [f"edge {e.source} {e.letter} {e.target}" for e in buchi.edges]
    return "\n".join(lines)


def _text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, LassoWord):
        return str(value)
    if isinstance(value, IntervalUnion):
        return str(value)
    if isinstance(value, BuchiAutomaton):
        return buchi_text(value)
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_text(v) for v in value) + ")"
    if isinstance(value, dict):
        return json.dumps(to_json_value(value), sort_keys=True)
    return str(value)


def render(payload: dict[str, Any], output_format: str = "json") -> str:
    """Render a result payload; both formats are deterministic"""
    if output_format == "json":
        return json.dumps(to_json_value(payload), sort_keys=True, separators=JSON_SEPARATORS)

    result = payload.get("result")
    if isinstance(result, BuchiAutomaton):
        return buchi_text(result)
    lines = [_text(result)]
    for key in sorted(payload):
        if key != "result" and payload[key] is not None:
            lines.append(f"{key}: {_text(payload[key])}")
    return "\n".join(lines)


def render_error(error: Exception) -> str:
    return json.dumps(
        {"error": type(error).__name__, "message": str(error)}, sort_keys=True, separators=JSON_SEPARATORS
    )
