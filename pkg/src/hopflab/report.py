"""Axiom verification reports.

Every ``check_*`` entry point returns a :class:`VerificationReport` listing
each axiom separately with pass/fail, a witness on failure, and the time the
check took.  A single boolean would hide which diagram failed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from .linalg import Matrix


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: Optional[dict] = None
    elapsed_s: float = 0.0

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "elapsed_s": self.elapsed_s}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    object_kind: str
    checks: List[AxiomCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def add(self, check: AxiomCheck) -> None:
        self.checks.append(check)

    def merge(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            name = f"{prefix}{c.name}" if prefix else c.name
            self.checks.append(AxiomCheck(name, c.passed, c.witness, c.elapsed_s))

    def to_json(self) -> dict:
        return {
            "object_kind": self.object_kind,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }

    def __str__(self) -> str:
        lines = [f"{self.object_kind}: {'all axioms pass' if self.ok else 'AXIOM FAILURE'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}")
            if c.witness is not None:
                lines.append(f"         witness: {c.witness}")
        return "\n".join(lines)


def first_difference(lhs: Matrix, rhs: Matrix) -> Optional[tuple]:
    if lhs.shape != rhs.shape:
        return (-1, -1)
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            if lhs.data[i][j] != rhs.data[i][j]:
                return (i, j)
    return None


def matrix_axiom(
    report: VerificationReport,
    name: str,
    lhs: Matrix,
    rhs: Matrix,
    row_label: Optional[Callable[[int], object]] = None,
    col_label: Optional[Callable[[int], object]] = None,
) -> None:
    """Record whether ``lhs == rhs`` entrywise, with a decoded witness if not."""
    start = time.perf_counter()
    diff = first_difference(lhs, rhs)
    elapsed = time.perf_counter() - start
    if diff is None:
        report.add(AxiomCheck(name, True, None, elapsed))
        return
    i, j = diff
    if i < 0:
        witness = {"reason": "shape mismatch", "lhs_shape": lhs.shape, "rhs_shape": rhs.shape}
    else:
        witness = {
            "row": row_label(i) if row_label else i,
            "col": col_label(j) if col_label else j,
            "lhs": str(lhs.data[i][j]),
            "rhs": str(rhs.data[i][j]),
        }
    report.add(AxiomCheck(name, False, witness, elapsed))
