"""Command-line driver: ``ftlverify [options] FILE...``.

Exit status: 0 when every goal is verified, 1 when some goal failed,
2 on unreadable input or syntax/translation errors, 64 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bridge import ExternalProverSpec, encode, set_max_processes
from .errors import FtlError
from .prover.proof import Refutation
from .syntax import parse_text
from .verifier import (
    FAILED, VERIFIED_BY_LEMMA, GoalResult, ProofTask, VerificationReport, VerifierConfig,
    prepare_document, verify_document,
)

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_USAGE = 0, 1, 2, 64
CONFIG_ENV = "FTLVERIFY_CONFIG"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ftlverify", description="Verify ForTheL-style mathematical texts.")
    p.add_argument("files", nargs="+", metavar="FILE")
    p.add_argument("--prover", action="append", metavar="ID",
                   help="native or a configured external prover; repeat to try several in order")
    p.add_argument("--timeout", type=float, help="seconds per goal (default 10)")
    p.add_argument("--depth", type=int, help="definition expansion depth (default 2)")
    p.add_argument("--filter-k", type=int, help="premise relevance depth (default 2)")
    p.add_argument("--chaining", choices=["on", "off"], help="chaining rule for transitive relations")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.add_argument("--dump", metavar="DIR", help="write every task to DIR")
    p.add_argument("--tptp-out", metavar="DIR", help="write TPTP problems to DIR and stop")
    p.add_argument("--config", metavar="PATH", help=f"JSON config file (or ${CONFIG_ENV})")
    p.add_argument("--jobs", type=int, default=1, help="goals proved concurrently")
    p.add_argument("--proofs", action="store_true", help="print proofs of prover-verified goals")
    return p


# -- configuration ----------------------------------------------------------------------

def load_config(path: str | None) -> dict:
    """Config file: {"provers": [{"id", "command", "timeout"}], "defaults": {...}}."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise UsageError(f"cannot read config {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"config {path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise UsageError(f"config {path} must be a JSON object")
    return data


def external_specs(data: dict) -> dict[str, ExternalProverSpec]:
    specs: dict[str, ExternalProverSpec] = {}
    for item in data.get("provers", []):
        try:
            spec = ExternalProverSpec(item["id"], item["command"], float(item.get("timeout", 10)))
        except (KeyError, TypeError, ValueError) as e:
            raise UsageError(f"bad prover entry {item!r}: {e}") from e
        if spec.id in specs:
            raise UsageError(f"prover id {spec.id!r} configured twice")
        specs[spec.id] = spec
    return specs


def make_config(args, data: dict) -> VerifierConfig:
    defaults = data.get("defaults", {})
    specs = external_specs(data)

    def pick(name, fallback):
        value = getattr(args, name)
        return value if value is not None else defaults.get(name, fallback)

    provers: list[str] = []
    for item in args.prover or defaults.get("provers", ["native"]):
        provers.extend(p for p in item.split(",") if p)
    for p in provers:
        if p != "native" and p not in specs:
            raise UsageError(f"unknown prover {p!r}")
    chaining = pick("chaining", "on")
    try:
        return VerifierConfig(
            timeout=float(pick("timeout", 10.0)),
            depth=int(pick("depth", 2)),
            filter_k=int(pick("filter_k", 2)),
            chaining=chaining in ("on", True),
            provers=tuple(provers),
            external=specs,
            dump_dir=args.dump,
            jobs=args.jobs,
        )
    except ValueError as e:
        raise UsageError(str(e)) from e


# -- rendering ------------------------------------------------------------------------------

def render_proof(r: Refutation, task: ProofTask | None = None) -> str:
    """Numbered linearization of a refutation, inputs named by their premises."""
    names = {p.label for p in task.premises} if task is not None else set()
    lines = []
    for s in r.steps:
        if s.clause.is_empty:
            body = "contradiction — goal established"
        else:
            body = str(s.clause)
        if s.rule == "input":
            label = s.label or "input"
            if label == "negated_goal":
                tag = "negated goal"
            elif label in names or task is None:
                tag = label
            else:
                tag = f"input {label}"
            lines.append(f"{s.id}. {body} [{tag}]")
        else:
            rule = f"chain({s.relation})" if s.rule == "chaining" else s.rule
            src = ", ".join(str(p) for p in s.parents)
            lines.append(f"{s.id}. {body} [{rule}, from {src}]")
    return "\n".join(lines)


def _status_text(e: GoalResult) -> str:
    if e.status == VERIFIED_BY_LEMMA:
        return "verified by lemma pass"
    if e.status == FAILED:
        return f"FAILED ({e.reason}) with {e.prover}; assumed downstream"
    if e.checked:
        return f"verified by {e.prover} (checked)"
    return f"verified by {e.prover} (external, unchecked)"


def render_text(report: VerificationReport, proofs: bool = False) -> str:
    """Per-goal lines in document order; no timings, so output is reproducible."""
    out = []
    name = report.file or "<input>"
    for e in report.entries:
        pos = f"{e.origin.line}:{e.origin.col}" if e.origin else "0:0"
        out.append(f"{name}:{pos}: {e.kind} {e.label}: {_status_text(e)}")
        for w in e.warnings:
            out.append(f"  warning: {w}")
        if proofs and e.refutation is not None:
            out.extend("    " + line for line in render_proof(e.refutation, e.task).splitlines())
    s = report.summary()
    out.append(f"{name}: {s['total']} goals, {s[VERIFIED_BY_LEMMA]} by lemma pass, "
               f"{s['verified-by-prover']} by prover, {s[FAILED]} failed")
    return "\n".join(out) + "\n"


def render_structured(report: VerificationReport) -> str:
    lines = []
    for e in report.entries:
        rec = {
            "file": report.file,
            "line": e.origin.line if e.origin else 0,
            "col": e.origin.col if e.origin else 0,
            "status": e.status,
            "prover": e.prover,
            "millis": e.millis,
            "kind": e.kind,
            "label": e.label,
            "reason": e.reason,
            "assumed": e.assumed,
            "checked": e.checked,
        }
        lines.append(json.dumps(rec, sort_keys=True))
    return "".join(line + "\n" for line in lines)


# -- driver -----------------------------------------------------------------------------------

def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise FileNotFoundError(f"{path}: error: no such file") from None
    except (OSError, UnicodeDecodeError) as e:
        raise FileNotFoundError(f"{path}: error: cannot read file ({e})") from None


def write_tptp(doc, cfg: VerifierConfig, path: str, out_dir: str) -> list[Path]:
    d = Path(out_dir)
    d.mkdir(parents=True, exist_ok=True)
    stem = Path(path).stem
    written = []
    for i, prep in enumerate(prepare_document(doc, cfg), 1):
        target = d / f"{stem}_{i:03d}_{prep.task.label}.p"
        target.write_text(encode(prep.task).text, encoding="utf-8")
        written.append(target)
    return written


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        data = load_config(args.config)
        cfg = make_config(args, data)
        if "max_processes" in data:
            set_max_processes(int(data["max_processes"]))
    except UsageError as e:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"ftlverify: error: {e}\n")
        return EXIT_USAGE

    failed = False
    for path in args.files:
        try:
            doc = parse_text(_read(path))
            if args.tptp_out:
                write_tptp(doc, cfg, path, args.tptp_out)
                continue
            file_cfg = cfg
            if cfg.dump_dir and len(args.files) > 1:
                file_cfg = VerifierConfig(**{**cfg.__dict__,
                                             "dump_dir": str(Path(cfg.dump_dir) / Path(path).stem)})
            report = verify_document(doc, file_cfg, file=path)
        except FileNotFoundError as e:
            sys.stderr.write(f"{e}\n")
            return EXIT_INPUT
        except FtlError as e:
            sys.stderr.write(e.report(path) + "\n")
            return EXIT_INPUT
        if args.format == "text":
            sys.stdout.write(render_text(report, args.proofs))
        else:
            sys.stdout.write(render_structured(report))
        sys.stdout.flush()
        failed |= not report.success
    return EXIT_FAILED if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
