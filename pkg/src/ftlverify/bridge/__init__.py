"""Interface to external TPTP provers."""

from .external import (
    ExternalProverSpec, check_available, run_external, set_max_processes, szs_status,
)
from .tptp import Problem, TptpSyntaxError, encode, mangle_symbol, read_tptp, to_tptp

__all__ = [
    "ExternalProverSpec", "Problem", "TptpSyntaxError", "check_available", "encode",
    "mangle_symbol", "read_tptp", "run_external", "set_max_processes", "szs_status", "to_tptp",
]
