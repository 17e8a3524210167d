"""Command-line front end.

Every subcommand builds a :class:`JobSpec`, runs it through :func:`run_job`
and prints a short summary; ``--json PATH`` writes the full report.  Exit
codes: 0 certified, 2 uncertified/inconclusive, 1 error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path

from . import closures, criteria, invariants
from .config import DEFAULT, Config
from .errors import FrobCloseError, ParseError
from .ideal_ops import IdealHandle
from .ringcore import RingPresentation, load_ring, poly_format

SCHEMA_VERSION = 1

CLOSURE_COMMANDS = {"fclose": "frobenius", "limclose": "limit", "flim": "f_lim", "limf": "lim_then_frobenius"}


@dataclass
class JobSpec:
    command: str
    ring: str
    ideal: str | None = None
    gens: str | None = None
    config: list = field(default_factory=list)
    seed: int | None = None
    samples: int | None = None
    quantity: str | None = None
    element: str | None = None
    test_element: str | None = None
    E: int | None = None
    outer: str | None = None
    mode: str | None = None
    cap_e: int | None = None
    cap_n: int | None = None
    output: str | None = None

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v not in (None, [])}

    @classmethod
    def from_dict(cls, data: dict) -> "JobSpec":
        return cls(**data)


def corpus_dir():
    return resources.files("frobclose") / "corpus"


def resolve_ring(path: str) -> RingPresentation:
    p = Path(path)
    if not p.exists():
        bundled = corpus_dir() / p.name
        if not p.parent.parts and bundled.is_file():
            return load_ring(bundled)
        raise FrobCloseError(f"ring file not found: {path}")
    return load_ring(p)


def job_config(job: JobSpec) -> Config:
    cfg = DEFAULT.with_overrides(job.config or [])
    over = {}
    if job.cap_e is not None:
        over["closure.cap_e"] = job.cap_e
    if job.cap_n is not None:
        over["closure.cap_n"] = job.cap_n
    if job.seed is not None:
        over["probe.seed"] = job.seed
    if job.samples is not None:
        over["probe.samples"] = job.samples
    if job.mode is not None:
        over["mult.mode"] = job.mode
    return cfg.with_overrides(over) if over else cfg


def _parse_list(ring, text, flag):
    if not text:
        raise FrobCloseError(f"{flag} is required for this command")
    try:
        return ring.parse_list(text)
    except ParseError as exc:
        raise FrobCloseError(f"{flag}: {exc}") from None


def _parse_one(ring, text, flag):
    if not text:
        raise FrobCloseError(f"{flag} is required for this command")
    try:
        return ring.parse(text)
    except ParseError as exc:
        raise FrobCloseError(f"{flag}: {exc}") from None


def _gens(ring, job):
    return _parse_list(ring, job.gens or job.ideal, "--gens")


def _ideal(ring, job):
    return IdealHandle(ring, _parse_list(ring, job.ideal or job.gens, "--ideal"))


def _length(v):
    return "infinite" if v == invariants.INFINITE else v


def run_job(job: JobSpec) -> tuple:
    """Run ``job`` and return ``(report dict, exit code)``; FrobCloseError propagates."""
    ring = resolve_ring(job.ring)
    ring = ring.with_budget(job_config(job).budget)
    cfg = job_config(job)
    cmd = job.command
    caveats = []
    certified = True
    summary = []
    start = time.perf_counter()

    if cmd in CLOSURE_COMMANDS:
        kind = CLOSURE_COMMANDS[cmd]
        gens = _gens(ring, job)
        res = closures.closure(kind, ring, IdealHandle(ring, gens) if kind == "frobenius" else gens, cfg)
        certified = res.certified
        result = res.to_dict()
        result["colength"] = _length(invariants.colength(res.ideal))
        summary.append(f"{kind} closure: ({', '.join(result['generators'])})"
                       f"  certified={res.certified}")
    elif cmd == "tprobe":
        q = _ideal(ring, job)
        x = _parse_one(ring, job.element, "--element")
        c = _parse_one(ring, job.test_element, "--test-element")
        res = closures.tight_closure_probe(q, x, c, job.E or cfg.corgor_E)
        result = res.to_dict()
        caveats.append("test element is asserted by the user, not verified")
        summary.append(f"tight-closure probe: {res.verdict}"
                       + (f" (witness e={res.witness_e})" if res.witness_e else f" (E={res.E})"))
    elif cmd == "length":
        inner = _ideal(ring, job)
        if job.outer:
            outer = IdealHandle(ring, _parse_list(ring, job.outer, "--outer"))
            value = invariants.quotient_length(inner, outer)
            result = {"quotient_length": value}
            summary.append(f"length(outer/inner) = {value}")
        else:
            value = _length(invariants.colength(inner))
            result = {"colength": value}
            summary.append(f"colength = {value}")
    elif cmd == "mult":
        m = invariants.multiplicity(ring, _gens(ring, job), cfg.mult_mode, cfg.mult_lech_max_n)
        result = {"multiplicity": m.value, "method": m.tag, "lech_estimates": list(m.estimates)}
        summary.append(f"e(q) = {m.value} [{m.tag}]")
    elif cmd == "invariants":
        rec = invariants.invariant_record(ring, _gens(ring, job), cfg)
        certified = rec.certified
        result = rec.to_dict()
        summary.append(" ".join(f"{k}={v}" for k, v in result.items() if k != "gens"))
    elif cmd == "probe":
        quantity = job.quantity or "surplus_f"
        samples = criteria.sample_parameter_sequences(
            ring, cfg.probe_samples, cfg.probe_degree_range, cfg.probe_seed, cfg.probe_terms)
        rep = criteria.probe_constancy(ring, quantity, samples, cfg, cfg.probe_seed)
        certified = rep.verdict != "inconclusive"
        result = rep.to_dict()
        caveats.extend(rep.caveats)
        detail = rep.value if rep.verdict == "constant" else \
            [w.quantity(quantity) for w in rep.witnesses] or rep.reason
        summary.append(f"{quantity}: {rep.verdict} {detail}")
    elif cmd == "mcontain":
        res = criteria.check_m_containment(ring, _gens(ring, job), cfg)
        result = res.to_dict()
        summary.append(f"m*q^(F-lim) in q: {res.f_lim}; m*q^lim in q: {res.lim}")
    elif cmd == "corgor":
        samples = criteria.sample_parameter_sequences(
            ring, cfg.probe_samples, cfg.probe_degree_range, cfg.probe_seed, cfg.probe_terms)
        cert = criteria.corgor_search(ring, cfg.corgor_candidate_degrees, cfg.corgor_E, samples, cfg)
        if cert is None:
            result = {"found": False}
            summary.append("no Q with m ⊆ Q:Q^F found among the candidates")
        else:
            result = dict(cert.to_dict(), found=True)
            caveats.extend(cert.caveats)
            summary.append(f"certificate: Q=({', '.join(result['Q'])}), Q:Q^F=({', '.join(result['Q_colon_QF'])})")
    elif cmd == "fedder":
        res = criteria.fedder(ring)
        result = res.to_dict()
        result["p_mod_3"] = ring.p % 3
        result["p_mod_4"] = ring.p % 4
        summary.append(f"F-pure (Fedder): {res.fpure}")
        if len(ring.defining) == 1:
            caveats.append("hypersurfaces are Gorenstein: F-pure is equivalent to F-injective here")
    else:
        raise FrobCloseError(f"unknown command {cmd!r}")

    report = {
        "schema_version": SCHEMA_VERSION,
        "job": job.to_dict(),
        "ring": {"name": ring.name, "char": ring.p, "vars": list(ring.names),
                 "relations": [poly_format(f) for f in ring.defining], "dim": ring.dim},
        "result": result,
        "certified": certified,
        "caveats": caveats,
        "summary": summary,
        "timing": {"seconds": round(time.perf_counter() - start, 4)},
    }
    return report, 0 if certified else 2


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _add_common(sp):
    sp.add_argument("--ring", required=True, help="ring file (or the name of a bundled corpus ring)")
    sp.add_argument("--json", dest="output", metavar="PATH", help="write the JSON report here ('-' = stdout)")
    sp.add_argument("--config", action="append", default=[], metavar="KEY=VAL")
    sp.add_argument("--cap-e", type=int)
    sp.add_argument("--cap-n", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobclose", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in CLOSURE_COMMANDS:
        sp = sub.add_parser(name, help=f"{CLOSURE_COMMANDS[name]} closure")
        _add_common(sp)
        sp.add_argument("--ideal")
        sp.add_argument("--gens")
    sp = sub.add_parser("tprobe", help="bounded tight-closure membership probe")
    _add_common(sp)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--element", required=True)
    sp.add_argument("--test-element", required=True)
    sp.add_argument("-E", type=int, default=4)
    sp = sub.add_parser("length", help="colength, or length of outer/inner")
    _add_common(sp)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--outer")
    for name, helptext in (("mult", "Hilbert-Samuel multiplicity"),
                           ("invariants", "all invariants of a parameter ideal"),
                           ("mcontain", "m*q^(F-lim) ⊆ q and m*q^lim ⊆ q")):
        sp = sub.add_parser(name, help=helptext)
        _add_common(sp)
        sp.add_argument("--gens")
        sp.add_argument("--ideal")
        if name == "mult":
            sp.add_argument("--mode", choices=("auto", "cm_exact", "lech"))
    sp = sub.add_parser("probe", help="constancy probe over sampled parameter ideals")
    _add_common(sp)
    sp.add_argument("--quantity", choices=invariants.QUANTITIES, default="surplus_f")
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int)
    sp = sub.add_parser("corgor", help="search Q with m ⊆ Q:Q^F (Cohen-Macaulay rings)")
    _add_common(sp)
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int)
    sp = sub.add_parser("fedder", help="Fedder's F-purity criterion")
    _add_common(sp)
    sp = sub.add_parser("check-corpus", help="run the bundled corpus against its expected results")
    sp.add_argument("--corpus", help="directory with *.ring and *.expected.json files")
    sp.add_argument("--only", action="append", default=[], help="restrict to these ring names")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check-corpus":
        from .golden import check_corpus

        return check_corpus(args.corpus, args.only)
    fields = {k: v for k, v in vars(args).items() if k in JobSpec.__dataclass_fields__}
    if "E" in vars(args):
        fields["E"] = args.E
    job = JobSpec(**fields)
    try:
        report, code = run_job(job)
    except (FrobCloseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for line in report["summary"]:
        print(line)
    for c in report["caveats"]:
        print(f"  caveat: {c}")
    if job.output == "-":
        sys.stdout.write(dump_report(report))
    elif job.output:
        Path(job.output).write_text(dump_report(report), encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())
