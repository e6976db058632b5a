from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional


@dataclass
class CheckResult:
    """Outcome of one named check; ``details`` must be JSON-serializable."""

    check: str
    passed: bool
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict:
        return {"check": self.check, "status": self.status, "details": self.details}


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(r.passed for r in results)


def first_failure(results: Iterable[CheckResult]) -> Optional[CheckResult]:
    for r in results:
        if not r.passed:
            return r
    return None


def legset_str(A) -> str:
    return "(" + ",".join(map(str, A)) + ")"


def vec_repr(basis, v) -> dict:
    return {legset_str(basis[k]): str(c) for k, c in sorted(v.items())}
