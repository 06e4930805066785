"""Structured verdicts for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

FREE_RING = "free-ring"
GAMMA = "gamma"
ORACLE = "oracle"


@dataclass
class IdentityReport:
    """Outcome of one identity check.

    mode records how the two sides were compared: "free-ring" is exact
    equality of raw polynomials, "gamma" is equality of normal forms, and
    "oracle" is exact evaluation at random rational specializations.
    """

    identity: str
    params: dict[str, Any] = field(default_factory=dict)
    mode: str = FREE_RING
    lhs: str = ""
    rhs: str = ""
    equal: bool = False

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "mode": self.mode,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
        }

    @staticmethod
    def from_json_dict(data: Mapping[str, Any]) -> "IdentityReport":
        return IdentityReport(
            identity=str(data["identity"]),
            params=dict(data["params"]),
            mode=str(data["mode"]),
            lhs=str(data["lhs"]),
            rhs=str(data["rhs"]),
            equal=bool(data["equal"]),
        )
