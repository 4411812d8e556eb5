"""Verdict certificates shared by the library and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .rational import format_rational

VERDICTS = (
    "spectral",
    "riesz_evidence",
    "frame",
    "not_spectral",
    "no_tiling",
    "inconclusive",
)


def jsonify(value: Any) -> Any:
    """Recursively convert witnesses to JSON-friendly values; rationals
    become 'p/q' strings so round trips stay bit-exact."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [jsonify(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonify(v) for k, v in value.items()}
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if hasattr(value, "__dict__"):
        return {k: jsonify(v) for k, v in vars(value).items()}
    return str(value)


@dataclass(frozen=True)
class Certificate:
    """A verdict, the witnesses backing it, which check produced it, and the
    evaluation policy that was in force."""

    verdict: str
    witnesses: dict = field(default_factory=dict)
    provenance: str = ""
    policy: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witnesses": jsonify(self.witnesses),
            "provenance": self.provenance,
            "policy": jsonify(self.policy),
        }
