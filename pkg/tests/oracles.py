"""Brute-force oracles used to check the fast paths.

None of these touch the kernel method or the Artinian colon; the colength
oracle does not use Groebner bases at all.
"""

from itertools import combinations, combinations_with_replacement, product as cartesian

from frobclose.groebner import buchberger, ideal_member
from frobclose.ringcore import Polynomial


def monomials_of_degree(n, d):
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def degree_piece_rank(gens, n, p, d):
    """dim_k of the degree-d part of the homogeneous ideal generated by ``gens``."""
    monos = monomials_of_degree(n, d)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in gens:
        dg = g.degree()
        if dg > d:
            continue
        for m in monomials_of_degree(n, d - dg):
            row = [0] * len(monos)
            for t, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(t, m))]] = c
            rows.append(row)
    return _rank_mod_p(rows, p) if rows else 0, len(monos)


def colength_by_rank(gens, n, p, max_degree=60):
    """ℓ(S/I) for a homogeneous m-primary ideal, summing dim (S/I)_d degree by degree."""
    total = 0
    for d in range(max_degree + 1):
        r, size = degree_piece_rank(gens, n, p, d)
        total += size - r
        if r == size:
            return total
    raise AssertionError("ideal does not look m-primary")


def krull_dim_brute(lead_monomials, n):
    """Largest variable subset avoiding every leading monomial's support."""
    best = 0
    for size in range(n + 1):
        for s in combinations(range(n), size):
            if not any(all(i in s for i, e in enumerate(m) if e) for m in lead_monomials):
                best = max(best, size)
    return best


def frobenius_kernel_brute(ring, q_gens, e, groups):
    """q + {x : x^(p^e) ∈ q^[p^e] + J}, enumerating every F_p-combination in each group.

    ``x^(p^e)`` is computed by repeated multiplication and the target ideal is
    generated by ``g ** p**e`` of the given generators.
    """
    p = ring.p
    q_pe = p**e
    target = buchberger([g ** q_pe for g in q_gens] + list(ring.defining), ring.order, ring=ring.S)
    extra = []
    for group in groups:
        for coeffs in cartesian(range(p), repeat=len(group)):
            if not any(coeffs):
                continue
            x = Polynomial(ring.S, {m: c for m, c in zip(group, coeffs) if c})
            if ideal_member(x ** q_pe, target):
                extra.append(x)
    return list(q_gens) + extra


def hilbert_function(gens, n, p, d):
    r, size = degree_piece_rank(gens, n, p, d)
    return size - r


def krull_dim_from_hilbert(gens, n, p, start=6, span=4):
    """Krull dimension of S/I for homogeneous I from the growth of its Hilbert function.

    Needs ``start`` past the regularity; fine for the small examples used in tests.
    """
    values = [hilbert_function(gens, n, p, d) for d in range(start, start + span)]
    if not any(values):
        return 0
    k = 1
    while len(set(values)) > 1:
        values = [b - a for a, b in zip(values, values[1:])]
        k += 1
    return k
