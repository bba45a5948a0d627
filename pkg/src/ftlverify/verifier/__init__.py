"""From a parsed document to proof tasks, and from tasks to a report."""

from .build import TaskBuilder, build_tasks, generate_induction
from .pipeline import (
    FAILED, VERIFIED_BY_LEMMA, VERIFIED_BY_PROVER, GoalResult, VerificationReport,
    VerifierConfig, prepare_document, verify_document,
)
from .tasks import Hints, Premise, ProofTask
from .transform import LemmaResult, expand_definitions, filter_premises, local_lemma_pass

__all__ = [
    "FAILED", "GoalResult", "Hints", "LemmaResult", "Premise", "ProofTask", "TaskBuilder",
    "VERIFIED_BY_LEMMA", "VERIFIED_BY_PROVER", "VerificationReport", "VerifierConfig",
    "build_tasks", "expand_definitions", "filter_premises", "generate_induction",
    "local_lemma_pass", "prepare_document", "verify_document",
]
