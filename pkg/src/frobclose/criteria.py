"""Decision procedures and sampled probes over parameter ideals.

Only non-constancy witnesses and the exact containment checks say something
about the ring itself; "constant" verdicts are statements about the samples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .closures import frobenius_closure, limit_closure
from .config import DEFAULT, Config
from .errors import FrobCloseError, SamplingError, UnitIdealError
from .ideal_ops import (
    IdealHandle,
    colon,
    ideal_contains,
    ideal_equal,
    ideal_sum,
    maximal_ideal,
    product,
)
from .invariants import QUANTITIES, colength, invariant_record, is_regular_sequence
from .ringcore import Polynomial, RingPresentation, poly_format

HYPOTHESES_CAVEAT = "excellence/equidimensionality/unmixedness of R are asserted, not checked"


# ---------------------------------------------------------------------------
# Fedder


@dataclass(frozen=True)
class FedderResult:
    fpure: bool
    colon_gens: tuple
    witness: Polynomial | None

    def __bool__(self):
        return self.fpure

    def to_dict(self) -> dict:
        return {
            "f_pure": self.fpure,
            "colon_generators": [poly_format(g) for g in self.colon_gens],
            "witness": poly_format(self.witness) if self.witness is not None else None,
        }


def fedder(ring: RingPresentation) -> FedderResult:
    """Fedder's criterion: R = S/J is F-pure iff (J^[p] : J) ⊄ m^[p], computed in S."""
    S = RingPresentation(ring.S, (), ring.name, ring.budget)
    if not ring.defining:
        return FedderResult(True, (S.S.one(),), S.S.one())
    J = IdealHandle(S, ring.defining)
    if J.is_unit():
        raise UnitIdealError("defining ideal is the unit ideal")
    Jp = IdealHandle(S, [f.frobenius_power(1) for f in J.gb.elements])
    col = colon(Jp, J, method="elimination")
    mp = IdealHandle(S, [v.frobenius_power(1) for v in S.S.gens()])
    for g in col.gb.elements:
        if g not in mp:
            return FedderResult(True, col.gb.elements, g)
    return FedderResult(False, col.gb.elements, None)


def fedder_fpure(ring: RingPresentation) -> bool:
    return fedder(ring).fpure


# ---------------------------------------------------------------------------
# parameters


def is_parameter_sequence(ring: RingPresentation, gens) -> tuple:
    """(verdict, diagnostics): d = dim R generators whose ideal has finite colength."""
    gens = list(gens)
    diag = {"count": len(gens), "dim": ring.dim}
    if len(gens) != ring.dim or any(not g for g in gens):
        diag["reason"] = "generator count differs from dim R"
        return False, diag
    q = IdealHandle(ring, gens)
    if q.is_unit():
        diag["reason"] = "generators give the unit ideal"
        return False, diag
    diag["quotient_dim"] = q.dim
    if q.dim != 0:
        diag["reason"] = "colength is infinite"
        return False, diag
    diag["colength"] = colength(q)
    return True, diag


def _monomials_of_degree(n, deg):
    out = []
    for combo in combinations_with_replacement(range(n), deg):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def pure_power_sequences(ring: RingPresentation, degrees) -> list:
    d = ring.dim
    out = []
    if d == 0:
        return out
    gens = ring.S.gens()
    for n in degrees:
        for subset in combinations(range(ring.nvars), d):
            seq = [gens[i] ** n for i in subset]
            if is_parameter_sequence(ring, seq)[0]:
                out.append(seq)
    return out


def sample_parameter_sequences(ring: RingPresentation, count: int, degree_range=(1, 2),
                               seed: int = 0, terms: int = 2, max_tries: int = 5000) -> list:
    """Deterministic list of homogeneous parameter sequences.

    Pure-power sequences come first; random forms with at most ``terms``
    monomials and nonzero F_p coefficients fill up to ``count``.
    """
    d = ring.dim
    if d == 0:
        raise SamplingError("ring has dimension 0: no parameter ideals to sample")
    degree_range = tuple(degree_range)
    out = pure_power_sequences(ring, degree_range)
    seen = {tuple(poly_format(g) for g in seq) for seq in out}
    rng = random.Random(seed)
    n = ring.nvars
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise SamplingError(f"found only {len(out)} of {count} parameter sequences")
        seq = []
        for _ in range(d):
            deg = rng.choice(degree_range)
            monos = _monomials_of_degree(n, deg)
            k = rng.randint(1, min(terms, len(monos)))
            chosen = rng.sample(monos, k)
            seq.append(Polynomial(ring.S, {m: rng.randrange(1, ring.p) for m in chosen}))
        key = tuple(poly_format(g) for g in seq)
        if key in seen:
            continue
        if is_parameter_sequence(ring, seq)[0]:
            seen.add(key)
            out.append(seq)
    return out


# ---------------------------------------------------------------------------
# probes


@dataclass(frozen=True)
class ProbeReport:
    ring_id: str
    seed: int
    quantity: str
    samples: tuple
    verdict: str
    value: int | None = None
    witnesses: tuple = ()
    reason: str = ""
    caveats: tuple = ()

    def to_dict(self) -> dict:
        return {
            "ring": self.ring_id,
            "seed": self.seed,
            "quantity": self.quantity,
            "verdict": self.verdict,
            "value": self.value,
            "reason": self.reason,
            "witnesses": [
                {"gens": [poly_format(g) for g in rec.gens], self.quantity: rec.quantity(self.quantity)}
                for rec in self.witnesses
            ],
            "samples": [
                dict(rec.to_dict(), degrees=[g.degree() for g in rec.gens]) if rec is not None
                else {"gens": [poly_format(g) for g in gens], "error": err}
                for gens, rec, err in self.samples
            ],
            "caveats": list(self.caveats),
        }


def probe_constancy(ring: RingPresentation, quantity: str, samples, config: Config | None = None,
                    seed: int = 0) -> ProbeReport:
    """Is ``quantity`` the same across the sampled parameter ideals?"""
    cfg = config or DEFAULT
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}; choose from {QUANTITIES}")
    caveats = ["sampling-only evidence: a constant verdict covers these samples only",
               HYPOTHESES_CAVEAT]
    rows = []
    for gens in samples:
        try:
            rows.append((tuple(gens), invariant_record(ring, gens, cfg), None))
        except FrobCloseError as exc:
            rows.append((tuple(gens), None, str(exc)))
    ring_id = ring.name or "ring"
    good = [rec for _, rec, _ in rows if rec is not None]
    failed = [err for _, rec, err in rows if rec is None]
    if failed:
        caveats.append(f"{len(failed)} sample(s) failed: {failed[0]}")
    uncertified = [rec for rec in good if not rec.certified]
    if uncertified:
        caveats.append(f"{len(uncertified)} record(s) have uncertified closures")

    def report(verdict, **kw):
        return ProbeReport(ring_id, seed, quantity, tuple(rows), verdict, caveats=tuple(caveats), **kw)

    if len(good) < 2:
        return report("inconclusive", reason="fewer than two usable samples")
    first = good[0]
    v0 = first.quantity(quantity)
    for rec in good[1:]:
        if rec.quantity(quantity) != v0:
            if first.certified and rec.certified:
                return report("non_constant", witnesses=(first, rec))
            return report("inconclusive", reason="values differ but closures are not certified")
    if uncertified or failed:
        return report("inconclusive", reason="not every sample produced a certified record")
    return report("constant", value=v0)


def recheck_witnesses(ring: RingPresentation, report: ProbeReport, config: Config | None = None) -> bool:
    """Recompute both witnesses of a non_constant verdict from their generators."""
    if report.verdict != "non_constant":
        return True
    a, b = (invariant_record(ring, w.gens, config) for w in report.witnesses)
    qa, qb = a.quantity(report.quantity), b.quantity(report.quantity)
    return (qa, qb) == tuple(w.quantity(report.quantity) for w in report.witnesses) and qa != qb


# ---------------------------------------------------------------------------
# m-containment


@dataclass(frozen=True)
class MContainment:
    f_lim: bool
    lim: bool

    def __bool__(self):
        return self.f_lim

    def to_dict(self) -> dict:
        return {"m_qflim_in_q": self.f_lim, "m_qlim_in_q": self.lim}


def check_m_containment(ring: RingPresentation, q_gens, config: Config | None = None) -> MContainment:
    """Exact tests m·q^{F-lim} ⊆ q and m·q^lim ⊆ q."""
    cfg = config or DEFAULT
    q = IdealHandle(ring, q_gens)
    F = frobenius_closure(q, cfg.closure_cap_e, cfg.closure_window, cfg.closure_min_e)
    L = limit_closure(ring, q_gens, cfg.closure_cap_n, cfg.closure_window)
    m = maximal_ideal(ring)
    flim = ideal_sum(F.ideal, L.ideal)
    return MContainment(ideal_contains(q, product(m, flim)), ideal_contains(q, product(m, L.ideal)))


# ---------------------------------------------------------------------------
# the Q : Q^F search for Cohen-Macaulay rings


@dataclass(frozen=True)
class CorGorCertificate:
    Q: tuple
    E_checked: int
    J_evidence: tuple
    m_containment: bool
    colon_QF: tuple
    t_consistency: tuple
    caveats: tuple = field(default=())

    def to_dict(self) -> dict:
        return {
            "Q": [poly_format(g) for g in self.Q],
            "E_checked": self.E_checked,
            "Q_colon_QF": [poly_format(g) for g in self.colon_QF],
            "m_in_Q_colon_QF": True,
            "m_QF_in_Q": self.m_containment,
            "t_consistency": list(self.t_consistency),
            "J_evidence": [[poly_format(g) for g in q] for q in self.J_evidence],
            "J_evidence_kind": "sampling-only",
            "caveats": list(self.caveats),
        }


def frob_colon(ring, gens, cap_e, window, min_e=1):
    """(q : q^F, q^F) for the ideal generated by ``gens``; None when q^F is uncertified."""
    q = IdealHandle(ring, gens)
    F = frobenius_closure(q, cap_e, window, min_e)
    if not F.certified:
        return None, F
    return colon(q, F.ideal), F


def gor_identity(ring, Q_gens, t: int, cap_e: int = 6, window: int = 2) -> bool:
    """Q_t^F == Q_t + x^(t-1)·Q^F with Q_t = (x_i^t) and x the product of the x_i."""
    Qt = IdealHandle(ring, [g**t for g in Q_gens])
    x = ring.S.one()
    for g in Q_gens:
        x = x * g
    QF = frobenius_closure(IdealHandle(ring, Q_gens), cap_e, window)
    QtF = frobenius_closure(Qt, cap_e, window)
    rhs = ideal_sum(Qt, product(IdealHandle(ring, [x ** (t - 1)]), QF.ideal))
    return ideal_equal(QtF.ideal, rhs)


def corgor_search(ring: RingPresentation, candidate_degrees=(1, 2), E: int = 3, samples=(),
                  config: Config | None = None, ts=(2, 3)):
    """First parameter ideal Q with m ⊆ Q : Q^F, m·Q^F ⊆ Q, Q : Q^F = Q_t : Q_t^F for t in ``ts``
    and Q ⊆ q : q^F for every sampled q; ``None`` when no candidate passes."""
    cfg = config or DEFAULT
    samples = [list(s) for s in samples]
    for s in samples:
        if not is_regular_sequence(ring, s):
            raise FrobCloseError("corgor needs a Cohen-Macaulay ring: a sample is not a regular sequence")
    window = cfg.closure_window
    m = maximal_ideal(ring)
    sample_colons = {}
    candidates = pure_power_sequences(ring, candidate_degrees)
    for s in samples:
        if all(g.degree() in candidate_degrees for g in s) and s not in candidates:
            candidates.append(s)
    for Q_gens in candidates:
        Q = IdealHandle(ring, Q_gens)
        QcolonQF, QF = frob_colon(ring, Q_gens, E, window)
        if QcolonQF is None or not ideal_contains(QcolonQF, m):
            continue
        if not ideal_contains(Q, product(m, QF.ideal)):
            continue
        consistent = []
        for t in ts:
            Qt_colon, _ = frob_colon(ring, [g**t for g in Q_gens], E, window)
            if Qt_colon is None or not ideal_equal(Qt_colon, QcolonQF):
                break
            consistent.append(t)
        if len(consistent) != len(ts):
            continue
        ok = True
        for s in samples:
            key = tuple(poly_format(g) for g in s)
            if key not in sample_colons:
                sample_colons[key] = frob_colon(ring, s, E, window)[0]
            qc = sample_colons[key]
            if qc is None or not ideal_contains(qc, Q):
                ok = False
                break
        if not ok:
            continue
        return CorGorCertificate(tuple(Q_gens), E, tuple(tuple(s) for s in samples), True,
                                 QcolonQF.minimal_gens, tuple(consistent),
                                 ("Q ⊆ ∩ q:q^F is checked on the sampled q only", HYPOTHESES_CAVEAT))
    return None
