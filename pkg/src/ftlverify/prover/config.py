from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .proof import Refutation


@dataclass(frozen=True)
class ProverConfig:
    timeout: float = 10.0
    max_clauses: int = 20000
    max_weight: int | None = None          # None keeps the search complete
    chaining: frozenset[str] = frozenset()  # relations handled by the chaining rule
    selection: str = "all"
    set_of_support: bool = True
    pick_ratio: tuple[int, int] = (1, 4)   # weight picks : age picks

    def __post_init__(self) -> None:
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.max_clauses <= 0:
            raise ValueError("max_clauses must be positive")
        if self.selection != "all":
            raise ValueError(f"unknown literal selection policy {self.selection!r}")


class Status(str, Enum):
    PROVED = "proved"
    SATURATED = "saturated"
    TIMED_OUT = "timeout"
    RESOURCE_OUT = "resource-out"
    ERROR = "error"


@dataclass(frozen=True)
class Verdict:
    status: Status
    refutation: Refutation | None = None
    prover: str = "native"
    stats: dict = field(default_factory=dict, compare=False)
    message: str = ""

    @property
    def proved(self) -> bool:
        return self.status is Status.PROVED

    @property
    def checked(self) -> bool:
        """Proved with a refutation that can be re-checked locally."""
        return self.proved and self.refutation is not None
