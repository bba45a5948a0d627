"""Proof tasks: a goal formula plus the premises visible to it."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..errors import SourcePosition
from ..fol.logic import Formula

# premise kinds
AXIOM, DEFINITION, CLAIM, STEP, CASE, INDUCTION, HYPOTHESIS, LEMMA = (
    "axiom", "definition", "claim", "step", "case", "induction", "hypothesis", "lemma")
PROTECTED_KINDS = frozenset({CASE, INDUCTION, HYPOTHESIS, LEMMA})


@dataclass(frozen=True)
class Premise:
    label: str
    formula: Formula
    kind: str = AXIOM
    origin: SourcePosition | None = field(default=None, compare=False)
    defines: str | None = None        # defined symbol, for definition premises
    assumed: bool = False             # a failed goal taken as premise anyway

    def __str__(self) -> str:
        return f"{self.label}: {self.formula}"


@dataclass(frozen=True)
class Hints:
    induction: bool = False
    depth: int = 2
    expanded: tuple[str, ...] = ()     # symbols unfolded in the goal
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class ProofTask:
    goal: Formula
    premises: tuple[Premise, ...] = ()
    origin: SourcePosition | None = field(default=None, compare=False)
    kind: str = "claim"                # claim | step | case | completeness | final
    hints: Hints = Hints()
    label: str = "goal"

    def with_premises(self, premises) -> "ProofTask":
        return replace(self, premises=tuple(premises))

    def with_goal(self, goal: Formula) -> "ProofTask":
        return replace(self, goal=goal)

    def add_premises(self, extra) -> "ProofTask":
        labels = {p.label for p in self.premises}
        new = [p for p in extra if p.label not in labels]
        return self.with_premises(self.premises + tuple(new))

    def text(self) -> str:
        """Canonical dump: one premise per line, then the goal."""
        lines = [f"% task {self.label} ({self.kind})"]
        lines += [f"{p.label} [{p.kind}]: {p.formula}" for p in self.premises]
        lines.append(f"goal: {self.goal}")
        return "\n".join(lines) + "\n"
