"""Ideals of R = S/J, represented by generator lifts to S together with J.

Every operation works on lifts and adds J before any Groebner computation, so
no quotient-ring arithmetic is ever needed.
"""

from __future__ import annotations

from functools import cached_property, reduce

from .errors import FrobCloseError, UnitIdealError
from .groebner import (
    GroebnerBasis,
    buchberger,
    eliminate_tagged,
    krull_dim_from_gb,
    normal_form,
    std_monomials,
)
from .linalg import left_kernel
from .ringcore import Polynomial, RingPresentation, poly_format


class IdealHandle:
    """An ideal of ``ring`` generated by the images of ``gens``."""

    def __init__(self, ring: RingPresentation, gens=()):
        gens = tuple(gens)
        for g in gens:
            if g.ring.p != ring.p or g.nvars != ring.nvars:
                raise ValueError("generator does not belong to the ring")
        self.ring = ring
        self.gens = tuple(g for g in gens if g)
        self._brackets = {}

    @classmethod
    def parse(cls, ring: RingPresentation, text: str) -> "IdealHandle":
        return cls(ring, ring.parse_list(text))

    @cached_property
    def gb(self) -> GroebnerBasis:
        return buchberger(list(self.gens) + list(self.ring.defining), self.ring.order,
                          self.ring.budget, ring=self.ring.S)

    @cached_property
    def dim(self) -> int:
        """Krull dimension of R/I."""
        return krull_dim_from_gb(self.gb)

    def is_unit(self) -> bool:
        return self.gb.is_unit()

    def is_m_primary(self) -> bool:
        return not self.is_unit() and self.dim == 0

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens) and \
            all(f.is_homogeneous() for f in self.ring.defining)

    @cached_property
    def standard_monomials(self):
        return std_monomials(self.gb)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.gb)

    def __contains__(self, f: Polynomial) -> bool:
        return not normal_form(f, self.gb).terms

    def __eq__(self, other):
        if not isinstance(other, IdealHandle):
            return NotImplemented
        return self.ring == other.ring and self.gb == other.gb

    def __hash__(self):
        return hash(self.gb)

    def __le__(self, other: "IdealHandle") -> bool:
        return ideal_contains(other, self)

    def __ge__(self, other: "IdealHandle") -> bool:
        return ideal_contains(self, other)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    @cached_property
    def minimal_gens(self) -> tuple:
        """Reduced-GB elements that are not redundant modulo J and the earlier ones."""
        J = self.ring.gb
        kept = []
        for g in self.gb.elements:
            if not normal_form(g, J).terms:
                continue
            if kept:
                sub = buchberger(kept + list(self.ring.defining), self.ring.order,
                                 self.ring.budget, ring=self.ring.S)
                if not normal_form(g, sub).terms:
                    continue
            kept.append(g)
        return tuple(kept)

    def to_strings(self) -> list:
        return [poly_format(g) for g in self.minimal_gens]

    def gb_strings(self) -> list:
        return [poly_format(g) for g in self.gb.elements]

    def __repr__(self):
        return "IdealHandle(%s)" % ", ".join(self.to_strings() or ["0"])


def ideal(ring: RingPresentation, gens) -> IdealHandle:
    if isinstance(gens, str):
        return IdealHandle.parse(ring, gens)
    return IdealHandle(ring, [ring.parse(g) if isinstance(g, str) else g for g in gens])


def zero_ideal(ring: RingPresentation) -> IdealHandle:
    return IdealHandle(ring, ())


def unit_ideal(ring: RingPresentation) -> IdealHandle:
    return IdealHandle(ring, (ring.S.one(),))


def maximal_ideal(ring: RingPresentation) -> IdealHandle:
    return IdealHandle(ring, ring.S.gens())


def _same_ring(I, K):
    if I.ring != K.ring:
        raise ValueError("ideals live in different rings")


def ideal_sum(I: IdealHandle, K: IdealHandle) -> IdealHandle:
    _same_ring(I, K)
    return IdealHandle(I.ring, I.gens + K.gens)


def product(I: IdealHandle, K: IdealHandle) -> IdealHandle:
    _same_ring(I, K)
    return IdealHandle(I.ring, [f * g for f in I.gens for g in K.gens])


def ideal_contains(I: IdealHandle, K: IdealHandle) -> bool:
    """True iff K ⊆ I."""
    _same_ring(I, K)
    return all(g in I for g in K.gens)


def ideal_equal(I: IdealHandle, K: IdealHandle) -> bool:
    _same_ring(I, K)
    return I.gb == K.gb


def _tag(f: Polynomial, tpow: int, c: int = 1) -> dict:
    p = f.p
    return {(tpow,) + m: v * c % p for m, v in f.terms.items()}


def intersect(I: IdealHandle, K: IdealHandle) -> IdealHandle:
    """I ∩ K by eliminating t from t·I + (1 - t)·K."""
    _same_ring(I, K)
    ring = I.ring
    if I.is_unit():
        return K
    if K.is_unit():
        return I
    tagged = []
    for g in I.gb.elements:
        tagged.append(_tag(g, 1))
    for h in K.gb.elements:
        d = _tag(h, 0)
        d.update(_tag(h, 1, -1))
        tagged.append(d)
    gens = eliminate_tagged(tagged, ring.S, ring.budget)
    return IdealHandle(ring, gens)


def exact_divide(h: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient h / f, which must be exact."""
    order = h.ring.order
    lm = f.leading_monomial(order)
    inv = pow(f.terms[lm], -1, f.p)
    rem = h
    quot = {}
    while rem.terms:
        m = rem.leading_monomial(order)
        if not all(a <= b for a, b in zip(lm, m)):
            raise FrobCloseError("division is not exact")
        q = tuple(b - a for a, b in zip(lm, m))
        c = rem.terms[m] * inv % f.p
        quot[q] = c
        rem = rem - f.mul_monomial(q, c)
    return Polynomial(h.ring, quot)


def _colon_by_element(I: IdealHandle, f: Polynomial) -> IdealHandle:
    ring = I.ring
    if f in I:
        return unit_ideal(ring)
    # (I + J) ∩ (f) taken in S, so every generator is divisible by f
    tagged = [_tag(g, 1) for g in I.gb.elements]
    d = _tag(f, 0)
    d.update(_tag(f, 1, -1))
    tagged.append(d)
    inter = eliminate_tagged(tagged, ring.S, ring.budget)
    return IdealHandle(ring, [exact_divide(h, f) for h in inter])


def _colon_artinian(I: IdealHandle, gens) -> IdealHandle:
    """I : (gens) for I of finite colength, as I plus a kernel on R/I."""
    basis = I.standard_monomials
    S = I.ring.S
    rows = []
    for b in basis:
        row = {}
        for k, g in enumerate(gens):
            r = I.reduce(g.mul_monomial(b))
            for m, c in r.terms.items():
                row[(k, m)] = c
        rows.append(row)
    cols = sorted({c for row in rows for c in row})
    index = {c: j for j, c in enumerate(cols)}
    rows = [{index[c]: v for c, v in row.items()} for row in rows]
    extra = []
    for vec in left_kernel(rows, S.p):
        extra.append(Polynomial(S, {basis[i]: c for i, c in vec.items()}))
    return IdealHandle(I.ring, I.gens + tuple(extra))


def colon(I: IdealHandle, K: IdealHandle, method: str = "auto") -> IdealHandle:
    """I : K = {r : rK ⊆ I}.

    ``method`` is ``"elimination"`` (generator-wise intersections, always
    available), ``"artinian"`` (linear algebra on R/I, needs finite colength) or
    ``"auto"``.
    """
    _same_ring(I, K)
    gens = [g for g in K.gens if g not in I]
    if not K.gens or all(not normal_form(g, K.ring.gb).terms for g in K.gens):
        raise FrobCloseError("colon by zero ideal")
    if not gens:
        return unit_ideal(I.ring)
    if I.is_unit():
        return I
    if method == "auto":
        method = "artinian" if I.dim == 0 else "elimination"
    if method == "artinian":
        if I.dim != 0:
            raise FrobCloseError("artinian colon needs an ideal of finite colength")
        return _colon_artinian(I, gens)
    if method != "elimination":
        raise ValueError(f"unknown colon method {method!r}")
    parts = [_colon_by_element(I, g) for g in gens]
    return reduce(intersect, parts)


def colon_element(I: IdealHandle, f: Polynomial, method: str = "auto") -> IdealHandle:
    return colon(I, IdealHandle(I.ring, (f,)), method)


def saturate(I: IdealHandle, f: Polynomial) -> IdealHandle:
    """I : f^∞, by eliminating t from I + (t·f - 1)."""
    ring = I.ring
    if not f:
        raise FrobCloseError("saturation by zero")
    if f.degree() == 0:
        return I
    tagged = [_tag(g, 0) for g in I.gb.elements]
    tf = _tag(f, 1)
    one = (0,) * (ring.nvars + 1)
    tf[one] = (tf.get(one, 0) - 1) % ring.p
    tagged.append({m: c for m, c in tf.items() if c})
    gens = eliminate_tagged(tagged, ring.S, ring.budget)
    return IdealHandle(ring, gens)


def bracket_power(I: IdealHandle, e: int) -> IdealHandle:
    """I^[p^e] + J, generated by p^e-th powers of the reduced GB of I + J."""
    if e < 0:
        raise ValueError("Frobenius exponent must be >= 0")
    if e == 0:
        return I
    cached = I._brackets.get(e)
    if cached is None:
        gens = [g.frobenius_power(e) for g in I.gb.elements]
        cached = IdealHandle(I.ring, gens + list(I.ring.defining))
        I._brackets[e] = cached
    return cached


def frobenius_generators(I: IdealHandle, e: int) -> IdealHandle:
    """I^[p^e] + J generated by powers of the stored generators (no GB rewrite)."""
    gens = [g.frobenius_power(e) for g in I.gens]
    return IdealHandle(I.ring, gens + list(I.ring.defining))


def require_proper(I: IdealHandle):
    if I.is_unit():
        raise UnitIdealError("unit ideal")
