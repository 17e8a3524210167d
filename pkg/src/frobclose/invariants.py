"""Colengths, Hilbert-Samuel multiplicities and the surplus quantities of parameter ideals."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .closures import ClosureResult, frobenius_closure, limit_closure, validate_parameters
from .config import DEFAULT, Config
from .errors import ContainmentError, FrobCloseError, MultiplicityNotCertified, NotPrimaryError
from .ideal_ops import IdealHandle, colon_element, ideal_contains, ideal_equal, ideal_sum
from .ringcore import poly_format

INFINITE = math.inf


def colength(I: IdealHandle):
    """ℓ(R/I): number of standard monomials of I + J, or ``math.inf``."""
    basis = I.standard_monomials
    return INFINITE if basis is None else len(basis)


def quotient_length(inner: IdealHandle, outer: IdealHandle) -> int:
    """ℓ(outer/inner) for m-primary ideals with inner ⊆ outer."""
    if not ideal_contains(outer, inner):
        raise ContainmentError("inner ideal is not contained in outer ideal")
    a, b = colength(inner), colength(outer)
    if a == INFINITE or b == INFINITE:
        raise NotPrimaryError("quotient length needs m-primary ideals")
    return a - b


@dataclass(frozen=True)
class Multiplicity:
    value: int
    method: str
    n_used: int | None = None
    estimates: tuple = ()

    @property
    def tag(self) -> str:
        return self.method if self.n_used is None else f"lech({self.n_used})"


def is_regular_sequence(ring, gens) -> bool:
    """Iterated colon test: ((x_1..x_i) + J) : x_(i+1) == (x_1..x_i) + J for every i."""
    for i in range(len(gens)):
        prefix = IdealHandle(ring, gens[:i])
        if prefix.is_unit():
            return False
        if gens[i] in prefix:
            return False
        if not ideal_equal(colon_element(prefix, gens[i]), prefix):
            return False
    return True


def _lech(ring, gens, max_n):
    d = len(gens)
    lengths = {}

    def a(n):
        if n not in lengths:
            lengths[n] = colength(IdealHandle(ring, [g**n for g in gens]))
        return lengths[n]

    estimates = []
    n = 1
    while 2 * n <= max_n:
        est = Fraction(a(2 * n) - a(n), (2**d - 1) * n**d)
        estimates.append(est)
        if len(estimates) >= 2 and est.denominator == 1 and estimates[-2] == est:
            return Multiplicity(int(est), "lech", 2 * n, tuple(str(e) for e in estimates))
        n *= 2
    raise MultiplicityNotCertified(
        "multiplicity not certified: Lech estimates %s did not repeat an integer value"
        % [str(e) for e in estimates])


def multiplicity(ring, q_gens, mode: str = "auto", lech_max_n: int = 8) -> Multiplicity:
    """e(q) for a system of parameters.

    ``cm_exact`` returns ℓ(R/q) once the generators are checked to form a
    regular sequence; ``lech`` uses (a_2n - a_n) / ((2^d - 1) n^d) with
    a_n = ℓ(R/(x_1^n, ..., x_d^n)) and insists on two equal integer estimates.
    """
    q_gens = list(q_gens)
    q = validate_parameters(ring, q_gens)
    if mode in ("auto", "cm_exact"):
        if is_regular_sequence(ring, q_gens):
            return Multiplicity(colength(q), "cm_exact")
        if mode == "cm_exact":
            raise MultiplicityNotCertified("generators are not a regular sequence")
    elif mode != "lech":
        raise ValueError(f"unknown multiplicity mode {mode!r}")
    return _lech(ring, q_gens, lech_max_n)


@dataclass(frozen=True)
class InvariantRecord:
    gens: tuple
    len_q: int
    len_qF: int
    len_qlim: int
    len_qflim: int
    len_qlimF: int
    mult: int
    mult_method: str
    certified: bool
    closures: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def surplus_buchsbaum(self) -> int:
        return self.len_q - self.mult

    @property
    def surplus_f(self) -> int:
        return self.mult - self.len_qflim

    @property
    def surplus_f_alt(self) -> int:
        return self.mult - self.len_qlimF

    @property
    def len_qF_over_q(self) -> int:
        return self.len_q - self.len_qF

    @property
    def len_qflim_over_q(self) -> int:
        return self.len_q - self.len_qflim

    @property
    def len_qlim_over_q(self) -> int:
        return self.len_q - self.len_qlim

    def quantity(self, name: str) -> int:
        if name not in QUANTITIES:
            raise ValueError(f"unknown quantity {name!r}")
        return getattr(self, name)

    def chain_ok(self) -> bool:
        return (self.len_q >= self.len_qlim >= self.len_qflim >= self.len_qlimF
                and self.mult >= self.len_qlim)

    def to_dict(self) -> dict:
        out = {
            "gens": [poly_format(g) for g in self.gens],
            "len_q": self.len_q,
            "len_qF": self.len_qF,
            "len_qlim": self.len_qlim,
            "len_qflim": self.len_qflim,
            "len_qlimF": self.len_qlimF,
            "mult": self.mult,
            "mult_method": self.mult_method,
            "certified": self.certified,
        }
        for name in QUANTITIES + ("len_qlim_over_q",):
            out[name] = getattr(self, name)
        return out


QUANTITIES = ("surplus_buchsbaum", "surplus_f", "surplus_f_alt", "len_qflim_over_q", "len_qF_over_q")


def invariant_record(ring, q_gens, config: Config | None = None) -> InvariantRecord:
    """All colengths and surpluses of the parameter ideal generated by ``q_gens``."""
    cfg = config or DEFAULT
    q_gens = tuple(q_gens)
    q = validate_parameters(ring, list(q_gens))
    caps = dict(cap_e=cfg.closure_cap_e, window=cfg.closure_window, min_e=cfg.closure_min_e)
    qF: ClosureResult = frobenius_closure(q, **caps)
    qlim: ClosureResult = limit_closure(ring, q_gens, cfg.closure_cap_n, cfg.closure_window)
    qflim = ideal_sum(qF.ideal, qlim.ideal)
    qlimF: ClosureResult = frobenius_closure(qlim.ideal, **caps)
    mult = multiplicity(ring, q_gens, cfg.mult_mode, cfg.mult_lech_max_n)
    rec = InvariantRecord(
        gens=q_gens,
        len_q=colength(q),
        len_qF=colength(qF.ideal),
        len_qlim=colength(qlim.ideal),
        len_qflim=colength(qflim),
        len_qlimF=colength(qlimF.ideal),
        mult=mult.value,
        mult_method=mult.tag,
        certified=qF.certified and qlim.certified and qlimF.certified,
        closures={"frobenius": qF, "limit": qlim, "f_lim": qflim, "lim_then_frobenius": qlimF},
    )
    if not rec.chain_ok():
        raise FrobCloseError(f"colength chain violated for {rec.to_dict()}")
    return rec
