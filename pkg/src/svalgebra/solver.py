"""Truncated cohomology solver.

Assembles the degree-zero cocycle constraint system on a window, solves
it exactly, quotients by coboundaries on a smaller inner window (which
discards boundary-contaminated components), and matches the surviving
classes against the expected generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import BasisIndex, L, Params, bracket, degree, enumerate_window
from .cocycles import (
    KnownCocycleId,
    canonical_pair,
    expected_h2,
    known_cocycle_value,
)
from .linalg import SparseMatrix, eliminate, in_span, quotient_dim, rank_of


class WindowTooSmall(Exception):
    pass


class UnknownRegistry:
    """Deterministically ordered degree-zero pairs with their column ids."""

    def __init__(self, pairs):
        self.pairs = list(pairs)
        self.index = {p: i for i, p in enumerate(self.pairs)}

    def __len__(self):
        return len(self.pairs)


@dataclass
class ConstraintSystem:
    matrix: SparseMatrix
    triple_log: list


def _filtered_window(N, families):
    window = enumerate_window(N)
    if families is None:
        return window
    fams = set(families)
    return [b for b in window if b.family in fams]


def degree_zero_pairs(window, params: Params, degree_filter=True) -> UnknownRegistry:
    elems = sorted(window)
    pairs = []
    for i, a in enumerate(elems):
        da = degree(a, params)
        for b in elems[i + 1:]:
            if not degree_filter or da + degree(b, params) == 0:
                pairs.append((a, b))
    return UnknownRegistry(pairs)


def _defect_row(registry, windowset, a, b, c, params):
    """The cocycle defect of (a,b,c) as a row over registry columns.

    Returns None when a bracket result leaves the window (or the touched
    pair is outside the registry), which excludes the row.
    """
    row = {}
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        for u, cf in bracket(x, y, params).items():
            if u not in windowset:
                return None
            key, sign = canonical_pair(u, z)
            if sign == 0:
                continue
            col = registry.index.get(key)
            if col is None:
                return None
            s = row.get(col, 0) + sign * cf
            if s:
                row[col] = s
            else:
                row.pop(col, None)
    return row


def _degree_buckets(elems, params):
    buckets = {}
    for b in elems:
        buckets.setdefault(degree(b, params), []).append(b)
    return buckets


def build_constraints(registry: UnknownRegistry, window, params: Params) -> ConstraintSystem:
    elems = sorted(window)
    windowset = set(elems)
    buckets = _degree_buckets(elems, params)
    rows, log = [], []
    for i, a in enumerate(elems):
        da = degree(a, params)
        for b in elems[i + 1:]:
            need = -(da + degree(b, params))
            for c in buckets.get(need, ()):
                if c <= b:
                    continue
                row = _defect_row(registry, windowset, a, b, c, params)
                if row:
                    rows.append(row)
                    log.append((a, b, c))
    return ConstraintSystem(SparseMatrix(rows, len(registry)), log)


def coboundary_basis(registry: UnknownRegistry, window, params: Params):
    """Coboundary vectors of f = delta_b for every degree-zero window element b."""
    vecs = []
    for b in sorted(window):
        if degree(b, params) != 0:
            continue
        vec = {}
        for col, (u, v) in enumerate(registry.pairs):
            cf = bracket(u, v, params).get(b)
            if cf:
                vec[col] = cf
        if vec:
            vecs.append(vec)
    return vecs


@dataclass
class H2Report:
    params: Params
    N: int
    M_inner: int
    cocycle_dim: int
    coboundary_dim: int
    h2_dim: int
    stabilized: bool
    matched: tuple


@lru_cache(maxsize=None)
def _inner_solution(params: Params, N: int, M_inner: int, families):
    window = _filtered_window(N, families)
    registry = degree_zero_pairs(window, params)
    system = build_constraints(registry, window, params)
    result = eliminate(system.matrix)

    inner_registry = degree_zero_pairs(_filtered_window(M_inner, families), params)
    col_map = {registry.index[p]: i for i, p in enumerate(inner_registry.pairs)}

    def project(vec):
        return {col_map[c]: v for c, v in vec.items() if c in col_map}

    null_proj = [project(v) for v in result.nullspace_basis]
    cob_proj = [project(v) for v in coboundary_basis(registry, window, params)]
    return inner_registry, null_proj, cob_proj


def _dims(params, N, M_inner, families):
    _, null_proj, cob_proj = _inner_solution(params, N, M_inner, families)
    cocycle_dim = rank_of(null_proj)
    coboundary_dim = rank_of(cob_proj)
    h2_dim = quotient_dim(null_proj, cob_proj)
    return cocycle_dim, coboundary_dim, h2_dim


def solve_h2(params: Params, N: int = 10, M_inner: int = 6, families=None) -> H2Report:
    if M_inner < 2:
        raise WindowTooSmall(f"inner window {M_inner} < 2")
    if M_inner > N - 2:
        raise WindowTooSmall(f"inner window {M_inner} must be <= N - 2 = {N - 2}")
    if families is not None:
        families = tuple(families)
    inner_registry, null_proj, cob_proj = _inner_solution(params, N, M_inner, families)
    cocycle_dim, coboundary_dim, h2_dim = _dims(params, N, M_inner, families)

    stabilized = False
    if M_inner <= N - 4:
        stabilized = _dims(params, N - 2, M_inner, families)[2] == h2_dim

    matched = []
    for cid in expected_h2(params)[1]:
        vec = {}
        for col, (a, b) in enumerate(inner_registry.pairs):
            v = known_cocycle_value(cid, params, a, b)
            if v:
                vec[col] = v
        ok = in_span(vec, null_proj) and not in_span(vec, cob_proj)
        matched.append((cid, ok))

    return H2Report(
        params=params,
        N=N,
        M_inner=M_inner,
        cocycle_dim=cocycle_dim,
        coboundary_dim=coboundary_dim,
        h2_dim=h2_dim,
        stabilized=stabilized,
        matched=tuple(matched),
    )


def sweep(param_grid, N: int = 10, M_inner: int = 6):
    return [solve_h2(p, N, M_inner) for p in param_grid]


def degree_zero_sufficiency(params: Params, N: int = 5) -> bool:
    """Check that, modulo coboundaries, every truncated cocycle is
    supported on degree-zero pairs.

    Unknowns are all window pairs (any degree); rows come from all
    degree-sum-zero triples plus every triple containing L_0.  Each
    nullspace vector's off-degree-zero components must then be realized
    by a coboundary, so subtracting it leaves a cocycle supported on
    degree zero.  The comparison is restricted to components an L_0 row
    actually constrains (pairs containing L_0, or pairs whose L_0-triple
    survives the window-closure rule); edge pairs whose row was dropped
    are unconstrained by construction.
    """
    window = sorted(enumerate_window(N))
    registry = degree_zero_pairs(window, params, degree_filter=False)
    windowset = set(window)
    system = build_constraints(registry, window, params)
    rows = list(system.matrix.rows)
    l0 = L(0)
    constrained = set()
    for i, a in enumerate(window):
        if a == l0:
            constrained.update(registry.index[(a, b)] for b in window[i + 1:])
            continue
        for b in window[i + 1:]:
            if b == l0:
                constrained.add(registry.index[(a, b)])
                continue
            row = _defect_row(registry, windowset, *sorted((l0, a, b)), params)
            if row:
                rows.append(row)
                constrained.add(registry.index[(a, b)])
    result = eliminate(SparseMatrix(rows, len(registry)))

    offzero = {
        col
        for col, (a, b) in enumerate(registry.pairs)
        if col in constrained and degree(a, params) + degree(b, params) != 0
    }

    def off_part(vec):
        return {c: v for c, v in vec.items() if c in offzero}

    cob_off = []
    for b in window:
        vec = {}
        for col, (u, v) in enumerate(registry.pairs):
            if col not in offzero:
                continue
            cf = bracket(u, v, params).get(b)
            if cf:
                vec[col] = cf
        if vec:
            cob_off.append(vec)

    base = rank_of(cob_off)
    joint = rank_of(cob_off + [off_part(v) for v in result.nullspace_basis])
    return joint == base
