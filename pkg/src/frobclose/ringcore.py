"""Polynomials over prime fields, monomial orders and quotient ring presentations.

Everything here is immutable.  Coefficients are plain ints kept in ``[0, p)``;
monomials are tuples of non-negative exponents.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    CharacteristicMismatch,
    ExponentOverflow,
    ParseError,
    RingFileError,
)

MAX_PRIME = 2**31 - 1
MAX_EXPONENT = 2**40

Monomial = tuple


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p <= MAX_PRIME) or not is_prime(self.p):
            raise ValueError(f"characteristic must be a prime in [2, 2^31-1], got {self.p}")

    def __call__(self, value: int) -> int:
        return value % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_%d" % self.p)
        return pow(a, -1, self.p)


# ---------------------------------------------------------------------------
# monomial orders


def _grevlex_key(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


def _lex_key(e):
    return tuple(e)


_BASE_KEYS = {"grevlex": _grevlex_key, "lex": _lex_key}


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on exponent tuples.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"elim"``.  An elimination order
    compares the first ``block`` variables by grevlex and breaks ties with
    ``base`` on the remaining ones, so any monomial involving the first block
    beats every monomial free of it.
    """

    kind: str = "grevlex"
    block: int = 0
    base: str = "grevlex"
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and (self.block < 1 or self.base not in _BASE_KEYS):
            raise ValueError("elimination order needs block >= 1 and a base order")

    def key(self, e: Monomial) -> tuple:
        k = self._cache.get(e)
        if k is None:
            if self.kind == "elim":
                k = _grevlex_key(e[: self.block]) + _BASE_KEYS[self.base](e[self.block:])
            else:
                k = _BASE_KEYS[self.kind](e)
            self._cache[e] = k
        return k

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise ValueError("monomial arity mismatch: %d vs %d" % (len(a), len(b)))
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    @classmethod
    def elimination(cls, block: int, base: str = "grevlex") -> "MonomialOrder":
        return cls("elim", block, base)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def monomial_cmp(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller than, equal to or bigger than ``b``."""
    return order.compare(a, b)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class PolynomialRing:
    """The ambient polynomial ring S = F_p[v1, ..., vn] with a monomial order."""

    p: int
    names: tuple
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        PrimeField(self.p)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exps: Iterable[int], c: int = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): c})

    def gens(self) -> list:
        n = self.nvars
        return [self.monomial(tuple(int(i == j) for j in range(n))) for i in range(n)]

    def var(self, name: str) -> "Polynomial":
        return self.gens()[self.names.index(name)]

    def with_order(self, order: MonomialOrder) -> "PolynomialRing":
        return PolynomialRing(self.p, self.names, order)

    def parse(self, text: str) -> "Polynomial":
        return poly_parse(text, self)


class Polynomial:
    """A polynomial in canonical form: no zero coefficients, coefficients in [0, p)."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Mapping[Monomial, int], *, _trusted=False):
        self.ring = ring
        if _trusted:
            self.terms = terms
        else:
            p, n = ring.p, ring.nvars
            clean = {}
            for m, c in terms.items():
                if len(m) != n:
                    raise ValueError("monomial %r has wrong arity for %d variables" % (m, n))
                c %= p
                if c:
                    clean[tuple(m)] = c
            self.terms = clean
        self._hash = None

    # -- basic queries -----------------------------------------------------

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_parts(self) -> dict:
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.ring, t, _trusted=True) for d, t in parts.items()}

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        order = order or self.ring.order
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder | None = None) -> int:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        inv = pow(self.leading_coefficient(order), -1, self.p)
        return self.scale(inv)

    def sorted_terms(self, order: MonomialOrder | None = None) -> list:
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.ring.p != self.ring.p:
            raise CharacteristicMismatch(f"characteristic {self.p} vs {other.p}")
        if other.ring.nvars != self.ring.nvars:
            raise ValueError("variable count mismatch")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Polynomial":
        p = self.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: v * c % p for m, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial(self.ring, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        if self.terms and self.degree() * n > MAX_EXPONENT:
            raise ExponentOverflow(f"power {n} overflows the exponent cap")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, mono: Monomial, c: int = 1) -> "Polynomial":
        p = self.p
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): v * c % p for m, v in self.terms.items()},
            _trusted=c % p != 0,
        )

    def frobenius_power(self, e: int) -> "Polynomial":
        return poly_frobenius_power(self, e)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.p == other.ring.p and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.p, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return poly_format(self)

    def __repr__(self):
        return f"Polynomial({poly_format(self)!r}, p={self.p})"


def poly_frobenius_power(f: Polynomial, e: int) -> Polynomial:
    """Return ``f**(p**e)``, computed term by term (c**(p**e) == c over F_p)."""
    if e < 0:
        raise ValueError("Frobenius exponent must be >= 0")
    q = f.p**e
    if f.terms and max(max(m) for m in f.terms) * q > MAX_EXPONENT:
        raise ExponentOverflow(f"F^{e} of a degree-{f.degree()} polynomial overflows")
    if q == 1:
        return f
    return Polynomial(f.ring, {tuple(a * q for a in m): c for m, c in f.terms.items()}, _trusted=True)


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("nat", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), start))
        elif m.group(3) is not None:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def poly_parse(text: str, ring) -> Polynomial:
    """Parse ``text`` as a polynomial of ``ring`` (a PolynomialRing or RingPresentation).

    Grammar: ``poly := term (('+'|'-') term)*``, ``term := [coeff '*'] factor
    ('*' factor)*`` or a bare ``coeff``, ``factor := var ['^' nat]``.  A leading
    sign is also accepted.
    """
    S = getattr(ring, "S", ring)
    toks = _tokenize(text)
    i = 0
    index = {name: k for k, name in enumerate(S.names)}
    n = S.nvars

    def peek():
        return toks[i]

    def expect_op(sym):
        nonlocal i
        kind, val, pos = toks[i]
        if kind != "op" or val != sym:
            raise ParseError(f"expected {sym!r}", pos, text)
        i += 1

    def parse_factor():
        nonlocal i
        kind, val, pos = toks[i]
        if kind != "var":
            raise ParseError("expected a variable", pos, text)
        if val not in index:
            raise ParseError(f"unknown variable {val!r}", pos, text)
        i += 1
        exp = 1
        if peek()[0] == "op" and peek()[1] == "^":
            i += 1
            kind, e, pos = toks[i]
            if kind != "nat":
                raise ParseError("expected a natural-number exponent", pos, text)
            i += 1
            exp = e
        if exp > MAX_EXPONENT:
            raise ExponentOverflow("exponent too large")
        mono = [0] * n
        mono[index[val]] = exp
        return tuple(mono)

    def parse_term():
        nonlocal i
        coeff = 1
        mono = (0,) * n
        kind, val, pos = peek()
        if kind == "nat":
            coeff = val
            i += 1
            if not (peek()[0] == "op" and peek()[1] == "*"):
                return mono, coeff
            i += 1
        elif kind != "var":
            raise ParseError("expected a term", pos, text)
        mono = mono_mul(mono, parse_factor())
        while peek()[0] == "op" and peek()[1] == "*":
            i += 1
            mono = mono_mul(mono, parse_factor())
        return mono, coeff

    if peek()[0] == "end":
        raise ParseError("empty polynomial", 0, text)
    terms = {}
    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if peek()[1] == "-" else 1
        i += 1
    while True:
        mono, c = parse_term()
        terms[mono] = terms.get(mono, 0) + sign * c
        kind, val, pos = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise ParseError(f"unexpected {val!r}", pos, text)
    return Polynomial(S, terms)


def _format_monomial(m, names):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_format(f: Polynomial, order: MonomialOrder | None = None) -> str:
    if not f.terms:
        return "0"
    out = []
    for m, c in f.sorted_terms(order):
        mono = _format_monomial(m, f.ring.names)
        if not mono:
            out.append(str(c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{c}*{mono}")
    return "+".join(out)


# ---------------------------------------------------------------------------
# quotient rings


@dataclass(frozen=True)
class GBBudget:
    max_pairs: int = 200_000
    max_terms: int = 500_000


@dataclass(frozen=True)
class RingPresentation:
    """R = S/J for S = F_p[vars] and J generated by ``defining``."""

    S: PolynomialRing
    defining: tuple = ()
    name: str = ""
    budget: GBBudget = field(default_factory=GBBudget, compare=False)

    def __post_init__(self):
        for f in self.defining:
            if f.ring.p != self.S.p:
                raise CharacteristicMismatch("relation over a different characteristic")
            if f.nvars != self.S.nvars:
                raise ValueError("relation has the wrong number of variables")

    @classmethod
    def make(cls, p: int, names, relations=(), order: str = "grevlex", name: str = "",
             budget: GBBudget | None = None) -> "RingPresentation":
        S = PolynomialRing(p, tuple(names), MonomialOrder(order))
        rels = tuple(r if isinstance(r, Polynomial) else poly_parse(r, S) for r in relations)
        rels = tuple(r for r in rels if r)
        return cls(S, rels, name, budget or GBBudget())

    @property
    def p(self) -> int:
        return self.S.p

    @property
    def names(self) -> tuple:
        return self.S.names

    @property
    def nvars(self) -> int:
        return self.S.nvars

    @property
    def order(self) -> MonomialOrder:
        return self.S.order

    @cached_property
    def gb(self):
        from .groebner import buchberger

        return buchberger(list(self.defining), self.order, self.budget, ring=self.S)

    @cached_property
    def dim(self) -> int:
        from .groebner import krull_dim_from_gb

        return krull_dim_from_gb(self.gb)

    def parse(self, text: str) -> Polynomial:
        return poly_parse(text, self.S)

    def parse_list(self, text: str) -> list:
        items = [t for t in text.split(",") if t.strip()]
        return [poly_parse(t, self.S) for t in items]

    def gens(self) -> list:
        return self.S.gens()

    def maximal_ideal_gens(self) -> list:
        return self.S.gens()

    def is_regular_presentation(self) -> bool:
        return not self.defining

    def with_budget(self, budget: GBBudget) -> "RingPresentation":
        return RingPresentation(self.S, self.defining, self.name, budget)

    def to_text(self) -> str:
        lines = [f"char {self.p}", "vars " + " ".join(self.names), f"order {self.order.kind}"]
        lines += [f"rel {poly_format(f)}" for f in self.defining]
        return "\n".join(lines) + "\n"


def parse_ring_text(text: str, source: str = "<ring>", name: str = "") -> RingPresentation:
    """Parse the line-oriented ring format (``char``, ``vars``, ``order``, ``rel``)."""
    p = names = None
    order = "grevlex"
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if head == "char":
                p = int(rest)
                PrimeField(p)
            elif head == "vars":
                names = tuple(rest.split())
                if not names:
                    raise ValueError("no variables declared")
                for v in names:
                    if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                        raise ValueError(f"bad variable name {v!r}")
            elif head == "order":
                if rest not in ("grevlex", "lex"):
                    raise ValueError(f"unknown order {rest!r}")
                order = rest
            elif head == "rel":
                rels.append((lineno, rest))
            else:
                raise ValueError(f"unknown directive {head!r}")
        except (ValueError, ParseError) as exc:
            raise RingFileError(f"{source}:{lineno}: {exc}") from None
    if p is None or names is None:
        raise RingFileError(f"{source}: ring file needs 'char' and 'vars' lines")
    S = PolynomialRing(p, names, MonomialOrder(order))
    polys = []
    for lineno, t in rels:
        try:
            polys.append(poly_parse(t, S))
        except ParseError as exc:
            raise RingFileError(f"{source}:{lineno}: {exc}") from None
    return RingPresentation(S, tuple(f for f in polys if f), name)


def load_ring(path) -> RingPresentation:
    from pathlib import Path

    path = Path(path)
    return parse_ring_text(path.read_text(encoding="utf-8"), str(path), path.stem)
