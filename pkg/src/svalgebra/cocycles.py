"""2-cochains: evaluation, cocycle defect, coboundaries, the known
generator formulas and the dimension oracle for the classification.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .algebra import (
    BasisIndex,
    Family,
    L,
    M,
    MuClass,
    Params,
    Y,
    bracket,
    classify_mu,
)

# canonically ordered basis pair (first < second in basis order)
Pair = tuple

# finitely supported linear functional: sparse map BasisIndex -> Fraction
LinearFunctional = dict


class RegimeMismatch(Exception):
    """A known-cocycle tag was requested outside its parameter regime."""


def canonical_pair(a: BasisIndex, b: BasisIndex):
    """Canonical ordering of a pair with the sign of the swap; (None, 0) on the diagonal."""
    if a == b:
        return None, 0
    if a < b:
        return (a, b), 1
    return (b, a), -1


class Cochain2:
    """Sparse alternating bilinear form stored on canonically ordered pairs."""

    def __init__(self, values=None):
        self.values = {}
        for (a, b), v in (values or {}).items():
            if a >= b:
                raise ValueError(f"pair ({a},{b}) is not canonically ordered")
            v = Fraction(v)
            if v:
                self.values[(a, b)] = v

    def ev(self, a: BasisIndex, b: BasisIndex) -> Fraction:
        key, sign = canonical_pair(a, b)
        if sign == 0:
            return Fraction(0)
        return sign * self.values.get(key, Fraction(0))

    def __add__(self, other):
        out = dict(self.values)
        for k, v in other.values.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Cochain2(out)

    def __sub__(self, other):
        return self + (other * Fraction(-1))

    def __mul__(self, c):
        c = Fraction(c)
        return Cochain2({k: c * v for k, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Cochain2) and self.values == other.values

    def __repr__(self):
        return f"Cochain2({self.values!r})"


def _as_ev(c):
    return c.ev if isinstance(c, Cochain2) else c


def eval_on_element(ev, el, b: BasisIndex) -> Fraction:
    return sum((cf * ev(u, b) for u, cf in el.items()), Fraction(0))


def cocycle_defect(c, a: BasisIndex, b: BasisIndex, x: BasisIndex, params: Params) -> Fraction:
    """psi([a,b],x) + psi([b,x],a) + psi([x,a],b), extended linearly."""
    ev = _as_ev(c)
    total = Fraction(0)
    for u, v, w in ((a, b, x), (b, x, a), (x, a, b)):
        total += eval_on_element(ev, bracket(u, v, params), w)
    return total


def coboundary_value(f: LinearFunctional, a, b, params: Params) -> Fraction:
    return sum((cf * f.get(u, 0) for u, cf in bracket(a, b, params).items()), Fraction(0))


def coboundary(f: LinearFunctional, pairs, params: Params) -> Cochain2:
    values = {}
    for a, b in pairs:
        v = coboundary_value(f, a, b, params)
        if v:
            values[(a, b)] = v
    return Cochain2(values)


class KnownCocycleId(enum.Enum):
    VIR = "VIR"
    C_LY_LAM_M3 = "C_LY_LAM_M3"
    C1_MY_LAM_M1 = "C1_MY_LAM_M1"
    C2_LY_LAM_M1 = "C2_LY_LAM_M1"
    C1_LY_LAM_1 = "C1_LY_LAM_1"
    C2_LM_YY_LAM_1 = "C2_LM_YY_LAM_1"
    C_YY_MU_INT = "C_YY_MU_INT"


_REGIMES = {
    KnownCocycleId.VIR: lambda lam, mc: True,
    KnownCocycleId.C_LY_LAM_M3: lambda lam, mc: lam == -3 and mc is MuClass.HALF_ODD_INTEGER,
    KnownCocycleId.C1_MY_LAM_M1: lambda lam, mc: lam == -1 and mc is MuClass.HALF_ODD_INTEGER,
    KnownCocycleId.C2_LY_LAM_M1: lambda lam, mc: lam == -1 and mc is MuClass.HALF_ODD_INTEGER,
    KnownCocycleId.C1_LY_LAM_1: lambda lam, mc: lam == 1 and mc is MuClass.HALF_ODD_INTEGER,
    KnownCocycleId.C2_LM_YY_LAM_1: lambda lam, mc: lam == 1 and mc is MuClass.HALF_ODD_INTEGER,
    KnownCocycleId.C_YY_MU_INT: lambda lam, mc: lam == -1 and mc is MuClass.INTEGER,
}


def regime_valid(cid: KnownCocycleId, params: Params) -> bool:
    return _REGIMES[cid](params.lam, classify_mu(params))


def known_cocycle_value(cid: KnownCocycleId, params: Params, a: BasisIndex, b: BasisIndex) -> Fraction:
    """Lazy evaluation of an explicit generator formula at an arbitrary pair."""
    if a == b:
        return Fraction(0)
    mu = params.mu
    fa, fb = a.family, b.family
    zero = Fraction(0)

    if cid is KnownCocycleId.VIR:
        if fa is Family.L and fb is Family.L and a.n == -b.n:
            n = a.n
            return (n**3 - n) / 12
        return zero

    if cid is KnownCocycleId.C_LY_LAM_M3:
        # c(L_n, Y_m) = delta_{n, -m-mu}
        if fa is Family.L and fb is Family.Y:
            return Fraction(1) if a.n == -b.n - mu else zero
        if fa is Family.Y and fb is Family.L:
            return -known_cocycle_value(cid, params, b, a)
        return zero

    if cid is KnownCocycleId.C1_MY_LAM_M1:
        # c1(M_m, Y_n) = delta_{n, -m-3mu}
        if fa is Family.M and fb is Family.Y:
            return Fraction(1) if b.n == -a.n - 3 * mu else zero
        if fa is Family.Y and fb is Family.M:
            return -known_cocycle_value(cid, params, b, a)
        return zero

    if cid is KnownCocycleId.C2_LY_LAM_M1:
        # c2(L_{-m}, Y_n) = m(m+1)/2 * delta_{n, m-mu}
        if fa is Family.L and fb is Family.Y:
            m = -a.n
            return m * (m + 1) / 2 if b.n == m - mu else zero
        if fa is Family.Y and fb is Family.L:
            return -known_cocycle_value(cid, params, b, a)
        return zero

    if cid is KnownCocycleId.C1_LY_LAM_1:
        # c1(L_{-m}, Y_n) = m(m^2-1) * delta_{n, m-mu}
        if fa is Family.L and fb is Family.Y:
            m = -a.n
            return m * (m**2 - 1) if b.n == m - mu else zero
        if fa is Family.Y and fb is Family.L:
            return -known_cocycle_value(cid, params, b, a)
        return zero

    if cid is KnownCocycleId.C2_LM_YY_LAM_1:
        # c2(L_{-m}, M_{m-2mu}) = c2(Y_{-m-mu}, Y_{m-mu}) = m(m^2-1)
        if fa is Family.L and fb is Family.M:
            m = -a.n
            return m * (m**2 - 1) if b.n == m - 2 * mu else zero
        if fa is Family.M and fb is Family.L:
            return -known_cocycle_value(cid, params, b, a)
        if fa is Family.Y and fb is Family.Y:
            m = b.n + mu
            return m * (m**2 - 1) if a.n == -m - mu else zero
        return zero

    if cid is KnownCocycleId.C_YY_MU_INT:
        # c(Y_p, Y_q) = -(p+mu) * delta_{q, -p-2mu}
        if fa is Family.Y and fb is Family.Y:
            return -(a.n + mu) if b.n == -a.n - 2 * mu else zero
        return zero

    raise ValueError(cid)


def known_cocycle(cid: KnownCocycleId, params: Params, pairs) -> Cochain2:
    if not regime_valid(cid, params):
        raise RegimeMismatch(f"{cid.value} is not defined at lam={params.lam}, mu={params.mu}")
    values = {}
    for a, b in pairs:
        v = known_cocycle_value(cid, params, a, b)
        if v:
            values[(a, b)] = v
    return Cochain2(values)


def normalizing_functional(psi, params: Params, window) -> LinearFunctional:
    """The case-by-case functional f used to strip the trivial part of psi.

    On the exceptional degree-zero slots where the case analysis leaves f
    undefined (lam = -1 slot M_{-2mu}; lam = -3 slot Y_{-mu}) f is set to 0.
    """
    ev = _as_ev(psi)
    lam, mu = params.lam, params.mu
    mc = classify_mu(params)
    half = mc in (MuClass.INTEGER, MuClass.HALF_ODD_INTEGER)  # mu in (1/2)Z
    f: LinearFunctional = {}
    for b in window:
        if b.family is Family.L:
            n = b.n
            if n != 0:
                val = ev(L(0), b) / n
            else:
                val = ev(L(-1), L(1)) / 2
        elif b.family is Family.M:
            n = b.n
            if not half or n != -2 * mu:
                val = ev(L(0), b) / (n + 2 * mu)
            elif lam != -1:
                val = -ev(L(1), M(int(-2 * mu - 1))) / (lam + 1)
            else:
                val = Fraction(0)
        else:
            p = b.n
            if mc is not MuClass.HALF_ODD_INTEGER or p != -mu:
                val = ev(L(0), b) / (p + mu)
            elif lam != -3:
                val = -2 * ev(L(1), Y(-mu - 1)) / (lam + 3)
            else:
                val = Fraction(0)
        if val:
            f[b] = val
    return f


def virasoro_scale(psi, params: Params) -> Fraction:
    """Coefficient of the (n^3-n)/12 part of the L-L tail psi(L_n, L_{-n}).

    After subtracting the coboundary of the normalizing functional, the
    tail lies in span{n, n^3}; matching at n = 1, 2 isolates the cubic part.
    """
    ev = _as_ev(psi)
    f = normalizing_functional(psi, params, [L(0), L(-1), L(1), L(-2), L(2)])
    t1 = ev(L(1), L(-1)) - coboundary_value(f, L(1), L(-1), params)
    t2 = ev(L(2), L(-2)) - coboundary_value(f, L(2), L(-2), params)
    # t_n = a n + b n^3  =>  b = (t2 - 2 t1) / 6
    return 2 * (t2 - 2 * t1)  # 12 * b


def normalize(psi, params: Params, window) -> Cochain2:
    """psi minus its trivial part and its Virasoro part, on all window pairs."""
    ev = _as_ev(psi)
    f = normalizing_functional(psi, params, window)
    alpha = virasoro_scale(psi, params)
    values = {}
    for i, a in enumerate(window):
        for b in window[i + 1:]:
            v = (
                ev(a, b)
                - coboundary_value(f, a, b, params)
                - alpha * known_cocycle_value(KnownCocycleId.VIR, params, a, b)
            )
            if v:
                values[(a, b)] = v
    return Cochain2(values)


def expected_h2(params: Params):
    """The classification oracle: (dimension, generator tags)."""
    lam = params.lam
    mc = classify_mu(params)
    if mc is MuClass.HALF_ODD_INTEGER:
        if lam == -3:
            return 2, (KnownCocycleId.VIR, KnownCocycleId.C_LY_LAM_M3)
        if lam == -1:
            return 3, (KnownCocycleId.VIR, KnownCocycleId.C1_MY_LAM_M1, KnownCocycleId.C2_LY_LAM_M1)
        if lam == 1:
            return 3, (KnownCocycleId.VIR, KnownCocycleId.C1_LY_LAM_1, KnownCocycleId.C2_LM_YY_LAM_1)
        return 1, (KnownCocycleId.VIR,)
    if mc is MuClass.INTEGER and lam == -1:
        return 2, (KnownCocycleId.VIR, KnownCocycleId.C_YY_MU_INT)
    return 1, (KnownCocycleId.VIR,)
