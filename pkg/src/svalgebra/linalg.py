"""Sparse exact-rational linear algebra.

Plain Gaussian elimination over Fractions with a fixed deterministic
pivot rule (lowest eligible column, then lowest row); no magnitude
pivoting, no fraction-free tricks.  Rows are deduplicated (after
scaling by the leading coefficient) and zero rows dropped up front.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

# sparse map column-id -> Fraction, no stored zeros
SparseVector = dict


class SubspaceNotContained(Exception):
    """Raised when a claimed subspace vector is outside the ambient span."""


@dataclass
class SparseMatrix:
    rows: list
    ncols: int


@dataclass
class EliminationResult:
    rank: int
    pivots: list  # (row index in the deduplicated row list, pivot column)
    nullspace_basis: list
    rref: list = field(repr=False, default_factory=list)


def _dedup(rows):
    seen = set()
    out = []
    for r in rows:
        if not r:
            continue
        lead = r[min(r)]
        key = tuple(sorted((c, v / lead) for c, v in r.items()))
        if key in seen:
            continue
        seen.add(key)
        out.append(dict(r))
    return out


def eliminate(m: SparseMatrix) -> EliminationResult:
    rows = _dedup(m.rows)
    remaining = list(enumerate(rows))
    reduced = []  # rows in reduced echelon form, one per pivot
    pivots = []
    for col in range(m.ncols):
        hit = None
        for k, (orig, r) in enumerate(remaining):
            if col in r:
                hit = k
                break
        if hit is None:
            continue
        orig, piv = remaining.pop(hit)
        lead = piv[col]
        piv = {c: v / lead for c, v in piv.items()}
        for rr in reduced:
            f = rr.get(col)
            if f:
                _axpy(rr, piv, -f)
        for _, r in remaining:
            f = r.get(col)
            if f:
                _axpy(r, piv, -f)
        reduced.append(piv)
        pivots.append((orig, col))
    pivot_cols = [c for _, c in pivots]
    pivot_set = set(pivot_cols)
    null = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        vec = {free: Fraction(1)}
        for rr, c in zip(reduced, pivot_cols):
            v = rr.get(free)
            if v:
                vec[c] = -v
        null.append(vec)
    return EliminationResult(len(pivots), pivots, null, reduced)


def _axpy(target, source, f):
    # target += f * source, dropping created zeros
    for c, v in source.items():
        s = target.get(c, 0) + f * v
        if s:
            target[c] = s
        else:
            target.pop(c, None)


def rank(m: SparseMatrix) -> int:
    return eliminate(m).rank


def apply_matrix(m: SparseMatrix, v: SparseVector) -> SparseVector:
    out = {}
    for i, r in enumerate(m.rows):
        s = sum((cv * v[c] for c, cv in r.items() if c in v), Fraction(0))
        if s:
            out[i] = s
    return out


def _ncols(vectors):
    cols = [c for v in vectors for c in v]
    return max(cols) + 1 if cols else 0


def rank_of(vectors) -> int:
    return rank(SparseMatrix([dict(v) for v in vectors], _ncols(vectors)))


def in_span(v: SparseVector, basis) -> bool:
    if not v:
        return True
    n = max(_ncols([v]), _ncols(basis))
    base = rank(SparseMatrix([dict(b) for b in basis], n))
    ext = rank(SparseMatrix([dict(b) for b in basis] + [dict(v)], n))
    return ext == base


def quotient_dim(space, subspace) -> int:
    for s in subspace:
        if not in_span(s, space):
            raise SubspaceNotContained(f"vector {s} is not inside the ambient space")
    return rank_of(space) - rank_of(subspace)
