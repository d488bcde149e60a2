"""Shared condition/verdict vocabulary for the feasibility pipelines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Condition:
    """One necessary condition: stable id, status and witness values.

    ``witness`` carries whatever made the decision (roots, parameters,
    Krein values, failure reasons); values may be exact rationals.
    """

    id: str
    status: str
    witness: Dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status == FAIL


def aggregate_verdict(conditions: Tuple[Condition, ...]) -> str:
    """Infeasible iff at least one applicable condition fails.

    "Feasible" means no implemented necessary condition fails; it is
    never a claim that a configuration exists.
    """
    return INFEASIBLE if any(c.failed for c in conditions) else FEASIBLE
