"""Buchberger's algorithm and the queries built on reduced Groebner bases.

The engine works on raw ``{exponent tuple: coefficient}`` dicts; the public
functions wrap them in :class:`Polynomial` / :class:`GroebnerBasis`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import BudgetExhausted, UnitIdealError
from .ringcore import (
    GBBudget,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    mono_divides,
    mono_lcm,
)


def _neg(key):
    return tuple(-k for k in key)


def _reduce(f, basis, order, p, max_terms=None):
    """Full reduction of the dict ``f`` by ``basis`` = [(lm, monic dict)]."""
    f = dict(f)
    key = order.key
    heap = [(_neg(key(m)), m) for m in f]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = f.pop(m, 0)
        if not c:
            continue
        for lm, g in basis:
            if all(a <= b for a, b in zip(lm, m)):
                break
        else:
            rem[m] = c
            continue
        q = tuple(b - a for a, b in zip(lm, m))
        for gm, gc in g.items():
            if gm == lm:
                continue
            t = tuple(a + b for a, b in zip(gm, q))
            old = f.get(t)
            v = ((old or 0) - c * gc) % p
            if v:
                if old is None:
                    heapq.heappush(heap, (_neg(key(t)), t))
                f[t] = v
            elif old is not None:
                del f[t]
        if max_terms is not None and len(f) > max_terms:
            raise BudgetExhausted(f"intermediate polynomial exceeded {max_terms} terms")
    return rem


def _lead(f, order):
    return max(f, key=order.key)


def _monic(f, order, p):
    lm = _lead(f, order)
    inv = pow(f[lm], -1, p)
    return lm, {m: c * inv % p for m, c in f.items()}


def _spoly(lm_i, gi, lm_j, gj, p):
    lcm = mono_lcm(lm_i, lm_j)
    qi = tuple(a - b for a, b in zip(lcm, lm_i))
    qj = tuple(a - b for a, b in zip(lcm, lm_j))
    out = {}
    for m, c in gi.items():
        if m != lm_i:
            out[tuple(a + b for a, b in zip(m, qi))] = c
    for m, c in gj.items():
        if m == lm_j:
            continue
        t = tuple(a + b for a, b in zip(m, qj))
        v = (out.get(t, 0) - c) % p
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _buchberger_raw(polys, order, p, budget):
    """Reduced Groebner basis of the dicts ``polys``; returns monic dicts sorted by leading monomial."""
    G = []  # (lm, g, sugar)
    pending = set()
    heap = []

    def add(h, sugar):
        lm, h = _monic(h, order, p)
        j = len(G)
        G.append((lm, h, sugar))
        for i in range(j):
            lmi, _, si = G[i]
            lcm = mono_lcm(lmi, lm)
            dl = sum(lcm)
            s = max(si + dl - sum(lmi), sugar + dl - sum(lm))
            pending.add((i, j))
            heapq.heappush(heap, (s, i, j))

    for f in sorted((dict(f) for f in polys if f), key=lambda f: (len(f), sorted(f))):
        r = _reduce(f, [(g[0], g[1]) for g in G], order, p, budget.max_terms)
        if r:
            add(r, max(sum(m) for m in f))
    processed = 0
    while heap:
        s, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lmi, gi, _ = G[i]
        lmj, gj, _ = G[j]
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue
        lcm = mono_lcm(lmi, lmj)
        skip = False
        for k, (lmk, _, _) in enumerate(G):
            if k in (i, j) or not mono_divides(lmk, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        processed += 1
        if processed > budget.max_pairs:
            raise BudgetExhausted(f"Groebner computation exceeded {budget.max_pairs} S-pairs")
        sp = _spoly(lmi, gi, lmj, gj, p)
        r = _reduce(sp, [(g[0], g[1]) for g in G], order, p, budget.max_terms)
        if r:
            add(r, s)
    # minimalize
    lms = [g[0] for g in G]
    keep = []
    for idx, lm in enumerate(lms):
        redundant = False
        for jdx, other in enumerate(lms):
            if jdx == idx or not mono_divides(other, lm):
                continue
            if other != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append(G[idx])
    # interreduce
    out = []
    for idx, (lm, g, _) in enumerate(keep):
        others = [(h[0], h[1]) for jdx, h in enumerate(keep) if jdx != idx]
        tail = {m: c for m, c in g.items() if m != lm}
        r = _reduce(tail, others, order, p, budget.max_terms)
        r[lm] = 1
        out.append((lm, r))
    out.sort(key=lambda t: order.key(t[0]))
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced, monic Groebner basis sorted by increasing leading monomial."""

    ring: PolynomialRing
    order: MonomialOrder
    elements: tuple

    @cached_property
    def leading_monomials(self) -> tuple:
        return tuple(g.leading_monomial(self.order) for g in self.elements)

    @cached_property
    def _basis(self):
        return [(lm, g.terms) for lm, g in zip(self.leading_monomials, self.elements)]

    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def key(self) -> tuple:
        return tuple(tuple(sorted(g.terms.items())) for g in self.elements)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def buchberger(gens, order: MonomialOrder | None = None, budget: GBBudget | None = None,
               ring: PolynomialRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring when no generators are given")
        ring = gens[0].ring
    order = order or ring.order
    budget = budget or GBBudget()
    for g in gens:
        if g.ring.p != ring.p or g.nvars != ring.nvars:
            raise ValueError("generators live in different rings")
    raw = _buchberger_raw([g.terms for g in gens], order, ring.p, budget)
    S = ring if ring.order == order else ring.with_order(order)
    return GroebnerBasis(S, order, tuple(Polynomial(S, g, _trusted=True) for _, g in raw))


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if f.nvars != gb.ring.nvars:
        raise ValueError("arity mismatch between polynomial and Groebner basis")
    if not f.terms:
        return f
    r = _reduce(f.terms, gb._basis, gb.order, gb.ring.p)
    return Polynomial(f.ring, r, _trusted=True)


def ideal_member(f: Polynomial, gb: GroebnerBasis) -> bool:
    return not normal_form(f, gb).terms


# ---------------------------------------------------------------------------
# elimination


def _eliminate_raw(polys, block, base, p, budget):
    """GB with the first ``block`` variables eliminated; returns dicts in the remaining variables."""
    order = MonomialOrder.elimination(block, base)
    gb = _buchberger_raw(polys, order, p, budget)
    out = []
    for lm, g in gb:
        if any(lm[:block]):
            continue
        out.append({m[block:]: c for m, c in g.items()})
    return out


def eliminate(gens, keep, budget: GBBudget | None = None) -> list:
    """Generators of ``ideal(gens) ∩ F_p[keep]`` (as polynomials of the original ring)."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    S = gens[0].ring
    keep_idx = [S.names.index(v) if isinstance(v, str) else v for v in keep]
    drop_idx = [i for i in range(S.nvars) if i not in keep_idx]
    keep_idx = [i for i in range(S.nvars) if i in keep_idx]
    perm = drop_idx + keep_idx
    base = S.order.kind if S.order.kind != "elim" else S.order.base
    budget = budget or GBBudget()
    if not drop_idx:
        return list(buchberger(gens, S.order, budget).elements)
    raw = [{tuple(m[i] for i in perm): c for m, c in g.terms.items()} for g in gens]
    elim = _eliminate_raw(raw, len(drop_idx), base, S.p, budget)
    out = []
    for g in elim:
        terms = {}
        for m, c in g.items():
            full = [0] * S.nvars
            for pos, i in enumerate(keep_idx):
                full[i] = m[pos]
            terms[tuple(full)] = c
        out.append(Polynomial(S, terms, _trusted=True))
    return out


def eliminate_tagged(tagged_polys, S: PolynomialRing, budget: GBBudget | None = None) -> list:
    """Eliminate one auxiliary variable ``t`` placed in front of the variables of ``S``.

    ``tagged_polys`` are dicts over (t, v1, ..., vn); the result is a list of
    polynomials of ``S`` generating the intersection with F_p[v1..vn].
    """
    base = S.order.kind if S.order.kind != "elim" else S.order.base
    elim = _eliminate_raw(tagged_polys, 1, base, S.p, budget or GBBudget())
    return [Polynomial(S, g, _trusted=True) for g in elim]


# ---------------------------------------------------------------------------
# dimension and standard monomials


def krull_dim_from_gb(gb: GroebnerBasis) -> int:
    if gb.is_unit():
        raise UnitIdealError("unit ideal")
    n = gb.ring.nvars
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gb.leading_monomials]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def krull_dim(gens, ring: PolynomialRing | None = None, budget: GBBudget | None = None) -> int:
    """Dimension of S/ideal(gens), read off the initial ideal."""
    return krull_dim_from_gb(buchberger(gens, None, budget, ring=ring))


def std_monomials(gb: GroebnerBasis, cap: int = 1_000_000):
    """Standard monomials of ``gb`` by increasing degree, or ``None`` when there are infinitely many."""
    if gb.is_unit():
        return []
    if krull_dim_from_gb(gb) > 0:
        return None
    n = gb.ring.nvars
    lms = gb.leading_monomials
    current = [(0,) * n]
    out = []
    while current:
        out.extend(current)
        if len(out) > cap:
            raise BudgetExhausted(f"more than {cap} standard monomials")
        nxt = set()
        for m in current:
            for i in range(n):
                t = m[:i] + (m[i] + 1,) + m[i + 1:]
                if t not in nxt and not any(mono_divides(lm, t) for lm in lms):
                    nxt.add(t)
        current = sorted(nxt, key=gb.order.key)
    return out
