"""Frobenius closure, limit closure and their combinations for parameter ideals.

Stabilization of the ascending chains is detected by ``window`` consecutive
equal members; results carry ``certified=False`` when the cap is hit first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import groupby

from .errors import FrobCloseError, NotParameterError, NotPrimaryError
from .ideal_ops import IdealHandle, bracket_power, colon_element, ideal_contains, ideal_sum
from .linalg import left_kernel
from .ringcore import Polynomial, poly_format


@dataclass(frozen=True)
class ClosureResult:
    ideal: IdealHandle
    kind: str
    stabilized_at: int
    window: int
    cap: int
    certified: bool
    steps: int = 0
    chain: tuple = ()
    parts: tuple = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "generators": self.ideal.to_strings(),
            "groebner_basis": self.ideal.gb_strings(),
            "stabilized_at": self.stabilized_at,
            "steps": self.steps,
            "window": self.window,
            "cap": self.cap,
            "certified": self.certified,
            "chain_lengths": list(self.chain),
        }


@dataclass(frozen=True)
class TightProbeResult:
    """Outcome of testing c·x^(p^e) ∈ q^[p^e] for e = 1..E.

    ``not_in_closure`` is a certificate (given that c really is a test
    element); ``in_closure_up_to`` is evidence only.
    """

    element: Polynomial
    test_element: Polynomial
    verdict: str
    E: int
    witness_e: int | None = None

    def to_dict(self) -> dict:
        return {
            "element": poly_format(self.element),
            "test_element": poly_format(self.test_element),
            "verdict": self.verdict,
            "E": self.E,
            "witness_e": self.witness_e,
            "caveat": "test element asserted by the user, not verified",
        }


class _Run:
    """Tracks the length of the current run of equal chain members."""

    def __init__(self, window, cap, floor=0):
        self.window, self.cap, self.floor = window, cap, floor
        self.run = 0
        self.last = None
        self.start = None

    def push(self, step, value) -> bool:
        if self.last is not None and value == self.last:
            self.run += 1
        else:
            self.run, self.start = 1, step
        self.last = value
        return self.run >= self.window and step >= self.floor


def _as_ideal(ring, gens) -> IdealHandle:
    return gens if isinstance(gens, IdealHandle) else IdealHandle(ring, gens)


def frobenius_closure(q: IdealHandle, cap_e: int = 6, window: int = 2, min_e: int = 1) -> ClosureResult:
    """q^F for an m-primary ideal q, as the stabilized chain of K_e = {x : x^(p^e) ∈ q^[p^e]}.

    Each K_e is q plus the kernel of the F_p-linear map m ↦ NF(m^(p^e)) on the
    standard monomials of q (grouped by degree when everything is homogeneous).
    """
    if cap_e < 1:
        raise ValueError("cap_e must be >= 1")
    if not q.is_m_primary():
        raise NotPrimaryError("ideal is not m-primary")
    ring = q.ring
    p = ring.p
    basis = q.standard_monomials
    if q.is_homogeneous():
        groups = [list(g) for _, g in groupby(basis, key=sum)]
    else:
        groups = [list(basis)]
    images = {m: {m: 1} for m in basis}
    tracker = _Run(window, cap_e, min_e)
    prev_kernel = []
    kernel = []
    chain = []
    certified = False
    e = 0
    for e in range(1, cap_e + 1):
        target = bracket_power(q, e)
        for m in basis:
            fm = Polynomial(ring.S, {tuple(a * p for a in t): c for t, c in images[m].items()},
                            _trusted=True)
            images[m] = target.reduce(fm).terms
        kernel = []
        for group in groups:
            rows = [images[m] for m in group]
            for vec in left_kernel(rows, p):
                kernel.append({group[i]: c for i, c in vec.items()})
        for vec in prev_kernel:
            if _apply(vec, images, p):
                raise FrobCloseError(f"Frobenius chain is not ascending at e={e}")
        prev_kernel = kernel
        colen = len(basis) - len(kernel)
        chain.append(colen)
        if tracker.push(e, colen):
            certified = True
            break
    gens = list(q.gens) + [Polynomial(ring.S, v) for v in kernel]
    return ClosureResult(IdealHandle(ring, gens), "frobenius", tracker.start, window, cap_e,
                         certified, e, tuple(chain))


def _apply(vec, images, p):
    out = {}
    for m, c in vec.items():
        for t, v in images[m].items():
            w = (out.get(t, 0) + c * v) % p
            if w:
                out[t] = w
            else:
                out.pop(t, None)
    return out


def validate_parameters(ring, gens) -> IdealHandle:
    q = _as_ideal(ring, gens)
    if len(q.gens) != len(gens if not isinstance(gens, IdealHandle) else gens.gens):
        raise NotParameterError("zero generator in a system of parameters")
    if len(q.gens) != ring.dim:
        raise NotParameterError(f"{len(q.gens)} generators but dim R = {ring.dim}")
    if not q.is_m_primary():
        raise NotParameterError("generators do not form a system of parameters (infinite colength)")
    return q


def limit_closure(ring, q_gens, cap_n: int = 8, window: int = 2) -> ClosureResult:
    """q^lim as the stabilized chain J_n = (x_1^(n+1), ..., x_d^(n+1)) : (x_1···x_d)^n, n >= 0."""
    q_gens = list(q_gens.gens if isinstance(q_gens, IdealHandle) else q_gens)
    q = validate_parameters(ring, q_gens)
    x = ring.S.one()
    for g in q_gens:
        x = x * g
    tracker = _Run(window, cap_n)
    prev = None
    current = q
    chain = []
    certified = False
    n = 0
    for n in range(0, cap_n + 1):
        if n == 0:
            current = q
        else:
            base = IdealHandle(ring, [g ** (n + 1) for g in q_gens])
            current = colon_element(base, x**n)
        if prev is not None and not ideal_contains(current, prev):
            raise FrobCloseError(f"limit-closure chain is not ascending at n={n}")
        prev = current
        colen = len(current.standard_monomials)
        chain.append(colen)
        if tracker.push(n, colen):
            certified = True
            break
    result = ideal_sum(current, q)
    return ClosureResult(result, "limit", tracker.start, window, cap_n, certified, n, tuple(chain))


def f_lim_closure(ring, q_gens, cap_e=6, cap_n=8, window=2, min_e=1) -> ClosureResult:
    """q^F + q^lim."""
    q = validate_parameters(ring, list(q_gens))
    F = frobenius_closure(q, cap_e, window, min_e)
    L = limit_closure(ring, q_gens, cap_n, window)
    return ClosureResult(ideal_sum(F.ideal, L.ideal), "f_lim", max(F.stabilized_at, L.stabilized_at),
                         window, max(cap_e, cap_n), F.certified and L.certified,
                         max(F.steps, L.steps), (), (F, L))


def lim_then_frobenius(ring, q_gens, cap_e=6, cap_n=8, window=2, min_e=1, limit=None) -> ClosureResult:
    """(q^lim)^F."""
    L = limit if limit is not None else limit_closure(ring, q_gens, cap_n, window)
    F = frobenius_closure(L.ideal, cap_e, window, min_e)
    return ClosureResult(F.ideal, "lim_then_frobenius", F.stabilized_at, window, cap_e,
                         F.certified and L.certified, F.steps, F.chain, (L, F))


def tight_closure_probe(q: IdealHandle, x: Polynomial, c: Polynomial, E: int) -> TightProbeResult:
    """Check c·x^(p^e) ∈ q^[p^e] + J for e = 1..E with a user-asserted test element c."""
    if E < 1:
        raise ValueError("E must be >= 1")
    if not c or c in IdealHandle(q.ring, ()):
        raise FrobCloseError("test element must be nonzero in R")
    for e in range(1, E + 1):
        if (c * x.frobenius_power(e)) not in bracket_power(q, e):
            return TightProbeResult(x, c, "not_in_closure", E, e)
    return TightProbeResult(x, c, "in_closure_up_to", E)


KINDS = ("frobenius", "limit", "f_lim", "lim_then_frobenius")


def closure(kind: str, ring, gens, config=None) -> ClosureResult:
    """Dispatch on ``kind`` with caps taken from ``config``."""
    from .config import DEFAULT

    cfg = config or DEFAULT
    caps = dict(cap_e=cfg.closure_cap_e, window=cfg.closure_window, min_e=cfg.closure_min_e)
    if kind == "frobenius":
        return frobenius_closure(_as_ideal(ring, gens), **caps)
    if kind == "limit":
        return limit_closure(ring, gens, cfg.closure_cap_n, cfg.closure_window)
    if kind == "f_lim":
        return f_lim_closure(ring, gens, cap_n=cfg.closure_cap_n, **caps)
    if kind == "lim_then_frobenius":
        return lim_then_frobenius(ring, gens, cap_n=cfg.closure_cap_n, **caps)
    raise ValueError(f"unknown closure kind {kind!r}")
