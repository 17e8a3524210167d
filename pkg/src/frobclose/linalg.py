"""Sparse Gaussian elimination over F_p."""


def left_kernel(rows, p):
    """Basis of {c : sum_i c_i * rows[i] = 0} for sparse rows ``{column: value}``.

    Returned vectors are dicts ``{row index: coefficient}`` in reduced echelon
    form with respect to the row index (deterministic for a given input).
    """
    pivots = {}  # column -> (row vector, tag vector), row normalized at pivot
    kernel = []
    for i, row in enumerate(rows):
        vec = {c: v % p for c, v in row.items() if v % p}
        tag = {i: 1}
        while vec:
            col = min(vec)
            if col not in pivots:
                inv = pow(vec[col], -1, p)
                vec = {c: v * inv % p for c, v in vec.items()}
                tag = {c: v * inv % p for c, v in tag.items()}
                pivots[col] = (vec, tag)
                break
            pv, pt = pivots[col]
            f = vec[col]
            vec = _axpy(vec, pv, -f, p)
            tag = _axpy(tag, pt, -f, p)
        else:
            kernel.append(tag)
    return _echelon(kernel, p)


def _axpy(a, b, f, p):
    out = dict(a)
    for c, v in b.items():
        w = (out.get(c, 0) + f * v) % p
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    return out


def _echelon(vectors, p):
    """Reduced row echelon form of sparse vectors, pivots on the largest index."""
    rows = []
    for v in vectors:
        v = dict(v)
        for piv, r in rows:
            if piv in v:
                v = _axpy(v, r, -v[piv], p)
        if not v:
            continue
        piv = max(v)
        inv = pow(v[piv], -1, p)
        v = {c: x * inv % p for c, x in v.items()}
        rows = [(q, _axpy(r, v, -r[piv], p) if piv in r else r) for q, r in rows]
        rows.append((piv, v))
    rows.sort()
    return [r for _, r in rows]


def rank(rows, p):
    pivots = {}
    r = 0
    for row in rows:
        vec = {c: v % p for c, v in row.items() if v % p}
        while vec:
            col = min(vec)
            if col not in pivots:
                inv = pow(vec[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in vec.items()}
                r += 1
                break
            vec = _axpy(vec, pivots[col], -vec[col], p)
    return r
