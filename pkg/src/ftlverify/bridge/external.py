"""Running TPTP provers as subprocesses and reading their SZS status."""

from __future__ import annotations

import os
import re
import shlex
import shutil
import signal
import subprocess
import tempfile
import threading
import time
from dataclasses import dataclass

from ..errors import SpawnFailure
from ..prover.config import Status, Verdict

SZS_LINE = re.compile(r"SZS status\s+([A-Za-z]+)")

_limit = threading.BoundedSemaphore(os.cpu_count() or 1)


def set_max_processes(n: int) -> None:
    """Cap on concurrently running external provers (default: CPU count)."""
    global _limit
    if n < 1:
        raise ValueError("need at least one process slot")
    _limit = threading.BoundedSemaphore(n)


@dataclass(frozen=True)
class ExternalProverSpec:
    id: str
    command: str                 # e.g. "vampire --mode casc -t {timeout} {file}"
    timeout: float = 10.0

    def __post_init__(self) -> None:
        if "{file}" not in self.command:
            raise ValueError(f"prover {self.id!r}: command must contain {{file}}")
        if self.timeout <= 0:
            raise ValueError(f"prover {self.id!r}: timeout must be positive")
        if not self.id or self.id == "native":
            raise ValueError(f"prover id {self.id!r} is reserved or empty")

    def argv(self, file: str, timeout: float) -> list[str]:
        secs = str(max(1, int(round(timeout))))
        return [part.replace("{file}", file).replace("{timeout}", secs)
                for part in shlex.split(self.command)]

    @property
    def executable(self) -> str:
        return shlex.split(self.command)[0]

    def available(self) -> bool:
        return shutil.which(self.executable) is not None


def check_available(spec: ExternalProverSpec) -> None:
    if not spec.available():
        raise SpawnFailure(f"prover {spec.id!r}: executable {spec.executable!r} not found")


def szs_status(output: str) -> str | None:
    m = SZS_LINE.search(output)
    return m.group(1) if m else None


def _verdict_from(output: str, prover: str, millis: int) -> Verdict:
    status = szs_status(output)
    stats = {"millis": millis}
    if status == "Theorem":
        return Verdict(Status.PROVED, None, prover, stats)
    if status == "CounterSatisfiable":
        return Verdict(Status.SATURATED, None, prover, stats)
    if status == "Timeout":
        return Verdict(Status.TIMED_OUT, None, prover, stats, output)
    return Verdict(Status.ERROR, None, prover, stats, output)


def _kill_group(proc: subprocess.Popen) -> None:
    try:
        os.killpg(proc.pid, signal.SIGKILL)
    except (ProcessLookupError, PermissionError):
        pass


def run_external(spec: ExternalProverSpec, problem: str, timeout: float | None = None) -> Verdict:
    """Run ``spec`` on a TPTP problem text.

    The prover runs in its own process group, which is killed on timeout
    and again after it exits so no helper processes outlive the call.
    Output goes to a file rather than a pipe: a helper that inherited the
    descriptor must not keep the call waiting once the prover is done.
    """
    timeout = spec.timeout if timeout is None else timeout
    with tempfile.TemporaryDirectory(prefix="ftl_") as tmp:
        path = os.path.join(tmp, "problem.p")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(problem)
        argv = spec.argv(path, timeout)
        with _limit, open(os.path.join(tmp, "output"), "w+b") as out:
            started = time.monotonic()
            try:
                proc = subprocess.Popen(argv, stdout=out, stderr=subprocess.STDOUT,
                                        stdin=subprocess.DEVNULL, start_new_session=True)
            except OSError as e:
                raise SpawnFailure(f"prover {spec.id!r}: {e}") from e
            try:
                proc.wait(timeout=timeout)
            except subprocess.TimeoutExpired:
                _kill_group(proc)
                proc.wait()
                millis = int((time.monotonic() - started) * 1000)
                return Verdict(Status.TIMED_OUT, None, spec.id, {"millis": millis})
            finally:
                _kill_group(proc)
            millis = int((time.monotonic() - started) * 1000)
            out.seek(0)
            text = out.read().decode("utf-8", "replace")
    return _verdict_from(text, spec.id, millis)
