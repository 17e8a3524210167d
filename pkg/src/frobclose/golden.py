"""Golden-file checks for the bundled example rings.

Each ``<name>.expected.json`` lists jobs and expectations on their reports.
An expectation maps a dotted path into the report to either a literal, or a
matcher ``{"set": [...]}`` (order-free list), ``{"ge": n}``, ``{"contains": [...]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .cli import JobSpec, corpus_dir, run_job
from .errors import FrobCloseError

_MISSING = object()


def _lookup(report, path):
    node = report
    for part in path.split("."):
        if isinstance(node, list):
            node = node[int(part)]
        elif isinstance(node, dict) and part in node:
            node = node[part]
        else:
            return _MISSING
    return node


def matches(value, expected) -> bool:
    if isinstance(expected, dict) and len(expected) == 1:
        (op, arg), = expected.items()
        if op == "set":
            return isinstance(value, list) and sorted(value) == sorted(arg)
        if op == "ge":
            return value >= arg
        if op == "contains":
            return isinstance(value, list) and all(a in value for a in arg)
    return value == expected


def check_file(path, ring_dir) -> list:
    """Run every job of one expected-results file; returns (label, ok, message) triples."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    ring_file = str(Path(ring_dir) / data["ring"])
    out = []
    for i, entry in enumerate(data["jobs"]):
        job = JobSpec(ring=ring_file, **entry["job"])
        label = f"{data['ring']}#{i} {job.command} {entry.get('label', '')}".rstrip()
        expect = dict(entry["expect"])
        want_exit = expect.pop("exit", 0)
        try:
            report, code = run_job(job)
        except FrobCloseError as exc:
            ok = want_exit == 1
            out.append((label, ok, "" if ok else f"error: {exc}"))
            continue
        problems = []
        if code != want_exit:
            problems.append(f"exit {code} != {want_exit}")
        for key, want in expect.items():
            got = _lookup(report, key)
            if got is _MISSING or not matches(got, want):
                problems.append(f"{key}: got {got!r}, expected {want!r}")
        out.append((label, not problems, "; ".join(problems)))
    return out


def check_corpus(directory=None, only=()) -> int:
    root = Path(directory) if directory else Path(str(corpus_dir()))
    files = sorted(root.glob("*.expected.json"))
    if only:
        files = [f for f in files if f.name.split(".")[0] in only]
    failures = 0
    for f in files:
        for label, ok, msg in check_file(f, root):
            print(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  -- {msg}" if msg else ""))
            failures += not ok
    print(f"{failures} failure(s)")
    return 1 if failures else 0
