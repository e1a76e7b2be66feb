"""Regression-corpus harness.

Corpus files hold blocks of the form::

    == <case id>
    -- input
    <input text, may wrap over several lines>
    -- expect
    <one expected output, may wrap>
    -- expect
    <another expected output, for ambiguous inputs>

Blocks are separated by blank lines; ``#`` starts a comment line.  A case
passes when the multiset of printed outputs equals the multiset of expected
outputs after renaming hypothesis labels and generated variables to their
canonical forms and collapsing whitespace.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .lean import normalize_names, print_command
from .lean_reader import LeanReadError, read_command
from .pipeline import run_pipeline

__all__ = [
    "CorpusCase",
    "CorpusFormatError",
    "CorpusReport",
    "check_cases",
    "corpus_check",
    "default_corpus_path",
    "load_corpus",
    "parse_corpus",
]


@dataclass(frozen=True)
class CorpusCase:
    id: str
    input: str
    expected: tuple[str, ...]


@dataclass
class CorpusReport:
    total: int = 0
    passed: int = 0
    failed: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "failures": [{"id": i, "diff": d} for i, d in self.failures],
        }


class CorpusFormatError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def default_corpus_path() -> Path:
    return Path(str(resources.files("forlean").joinpath("data/corpus.txt")))


def parse_corpus(text: str) -> list[CorpusCase]:
    cases: list[CorpusCase] = []
    case_id: str | None = None
    input_lines: list[str] = []
    expects: list[list[str]] = []
    section: list[str] | None = None
    seen_ids: set[str] = set()

    def finish(line_no: int) -> None:
        nonlocal case_id, input_lines, expects, section
        if case_id is None:
            return
        if not input_lines:
            raise CorpusFormatError(line_no, f"case {case_id!r} has no input")
        if not expects or not all(expects):
            raise CorpusFormatError(line_no, f"case {case_id!r} has no expected output")
        cases.append(
            CorpusCase(case_id, " ".join(input_lines), tuple(" ".join(e) for e in expects))
        )
        case_id, input_lines, expects, section = None, [], [], None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("== "):
            finish(line_no)
            case_id = line[3:].strip()
            if not case_id:
                raise CorpusFormatError(line_no, "empty case id")
            if case_id in seen_ids:
                raise CorpusFormatError(line_no, f"duplicate case id {case_id!r}")
            seen_ids.add(case_id)
        elif line == "-- input":
            if case_id is None:
                raise CorpusFormatError(line_no, "'-- input' outside a case")
            section = input_lines
        elif line == "-- expect":
            if case_id is None:
                raise CorpusFormatError(line_no, "'-- expect' outside a case")
            expects.append([])
            section = expects[-1]
        else:
            if section is None:
                raise CorpusFormatError(line_no, f"content outside a section: {line!r}")
            section.append(line)
    finish(len(text.splitlines()) + 1)
    return cases


def load_corpus(path) -> list[CorpusCase]:
    with open(path, encoding="utf-8") as handle:
        return parse_corpus(handle.read())


def _collapse(text: str) -> str:
    return " ".join(text.split())


def _canonical(printed: str) -> str:
    """Reprint with normalized hypothesis labels and generated variables."""
    return _collapse(print_command(normalize_names(read_command(printed))))


def check_cases(cases: list[CorpusCase], out=None) -> CorpusReport:
    """Run every case through the pipeline, printing one PASS/FAIL line per
    case (sorted by id) and a summary."""
    out = out if out is not None else sys.stdout
    report = CorpusReport()
    for case in sorted(cases, key=lambda c: c.id):
        report.total += 1
        diff = _check_one(case)
        if diff is None:
            report.passed += 1
            print(f"PASS {case.id}", file=out)
        else:
            report.failed += 1
            report.failures.append((case.id, diff))
            print(f"FAIL {case.id}", file=out)
            for line in diff.splitlines():
                print(f"  {line}", file=out)
    print(f"passed {report.passed}/{report.total}", file=out)
    return report


def _check_one(case: CorpusCase) -> str | None:
    traces = run_pipeline(case.input)
    produced = [printed for trace in traces for printed in trace.printed]
    problems = [message for trace in traces for _, message in trace.diagnostics]
    try:
        expected = sorted(_canonical(e) for e in case.expected)
    except LeanReadError as err:
        return f"unreadable expectation: {err}"
    try:
        got = sorted(_canonical(p) for p in produced)
    except LeanReadError as err:  # would mean the printer left its fragment
        return f"unreadable output: {err}"
    if got == expected and not problems:
        return None
    lines = ["expected:"] + [f"  {e}" for e in expected] + ["got:"] + [f"  {g}" for g in got]
    lines.extend(f"error: {p}" for p in problems)
    return "\n".join(lines)


def corpus_check(path, *, json_path=None, out=None) -> CorpusReport:
    """Check the corpus file at ``path``; optionally write a JSON report."""
    report = check_cases(load_corpus(path), out=out)
    if json_path is not None:
        with open(json_path, "w", encoding="utf-8") as handle:
            json.dump(report.as_dict(), handle, ensure_ascii=False, indent=2)
            handle.write("\n")
    return report
