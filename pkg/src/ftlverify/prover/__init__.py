"""Native saturation prover over equality-free clauses."""

from .config import ProverConfig, Status, Verdict
from .inference import chain, factor, resolve, subsumes
from .loop import prove, transitivity_axiom
from .proof import CheckResult, ProofStep, Refutation, check_refutation

__all__ = [
    "CheckResult", "ProofStep", "ProverConfig", "Refutation", "Status", "Verdict", "chain",
    "check_refutation", "factor", "prove", "resolve", "subsumes", "transitivity_axiom",
]
