from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckResult:
    """Outcome of an exact verification.

    ``witness`` holds the first counterexample found (None on success);
    ``details`` carries whatever the check wants to report alongside.
    """

    name: str
    passed: bool
    witness: Any = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "pass": self.passed,
            "witness": _plain(self.witness),
            "details": _plain(self.details),
        }


def _plain(x):
    """Recursively convert exact values to JSON-friendly data."""
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "to_nested"):
        return x.to_nested()
    if isinstance(x, CheckResult):
        return x.as_dict()
    return str(x)
