"""Independent dense elimination oracle used to cross-check the sparse solver."""

from fractions import Fraction


def dense_from_sparse(rows, ncols):
    out = []
    for r in rows:
        dense = [Fraction(0)] * ncols
        for c, v in r.items():
            dense[c] = Fraction(v)
        out.append(dense)
    return out


def dense_rank(rows):
    """Textbook Gaussian elimination on dense rational rows."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        lead = m[rank][col]
        m[rank] = [x / lead for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def dense_nullity(rows, ncols):
    return ncols - dense_rank(dense_from_sparse(rows, ncols))


def degree_zero_triples(window, params):
    """All unordered triples of distinct window elements with degree sum zero."""
    from svalgebra.algebra import degree

    elems = sorted(window)
    buckets = {}
    for b in elems:
        buckets.setdefault(degree(b, params), []).append(b)
    for i, a in enumerate(elems):
        da = degree(a, params)
        for b in elems[i + 1:]:
            need = -(da + degree(b, params))
            for c in buckets.get(need, ()):
                if c > b:
                    yield a, b, c
