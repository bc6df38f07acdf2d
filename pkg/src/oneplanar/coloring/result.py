from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Literal

Status = Literal["found", "none", "timeout"]


@dataclass
class SolveResult:
    """Outcome of an exact search: a witness, a proof of absence, or a timeout."""

    status: Status
    solution: Any = None
    value: int | None = None
    nodes: int = 0
    elapsed: float = 0.0
    info: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status == "found"

    @property
    def timed_out(self) -> bool:
        return self.status == "timeout"


class SearchTimeout(Exception):
    pass


class Deadline:
    def __init__(self, timeout: float | None):
        self.start = time.monotonic()
        self.end = None if timeout is None else self.start + timeout

    def check(self) -> None:
        if self.end is not None and time.monotonic() > self.end:
            raise SearchTimeout

    def remaining(self) -> float | None:
        return None if self.end is None else max(0.0, self.end - time.monotonic())

    def elapsed(self) -> float:
        return time.monotonic() - self.start
