"""Basis indexing, deformation parameters and the Lie bracket.

The algebra is spanned by L_n, M_n (n integer) and Y_p (p half-odd
integer), with two exact rational deformation parameters (lam, mu).
Half-integer indices are stored doubled (idx2 = 2n or 2p) so that all
index arithmetic stays integral; the parity of idx2 encodes the family
constraint.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class Family(enum.IntEnum):
    # the numeric order fixes the global basis ordering: L < Y < M
    L = 0
    Y = 1
    M = 2


class MuClass(enum.Enum):
    NOT_HALF_INTEGER = "NotHalfInteger"
    INTEGER = "Integer"
    HALF_ODD_INTEGER = "HalfOddInteger"


@dataclass(frozen=True, order=True)
class BasisIndex:
    family: Family
    idx2: int  # doubled index: 2n for L_n / M_n, 2p for Y_p

    def __post_init__(self):
        odd = self.idx2 % 2 != 0
        if (self.family is Family.Y) != odd:
            raise ValueError(
                f"index parity {self.idx2} incompatible with family {self.family.name}"
            )

    @property
    def n(self) -> Fraction:
        """The actual (possibly half-integer) index."""
        return Fraction(self.idx2, 2)

    def __repr__(self):
        return f"{self.family.name}_{self.n}"


def L(n: int) -> BasisIndex:
    return BasisIndex(Family.L, 2 * n)


def M(n: int) -> BasisIndex:
    return BasisIndex(Family.M, 2 * n)


def Y(p) -> BasisIndex:
    p = Fraction(p)
    return BasisIndex(Family.Y, int(2 * p))


@dataclass(frozen=True)
class Params:
    lam: Fraction
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "mu", Fraction(self.mu))

    @property
    def mu_class(self) -> MuClass:
        return classify_mu(self)


def classify_mu(params: Params) -> MuClass:
    if params.mu.denominator == 1:
        return MuClass.INTEGER
    if params.mu.denominator == 2:
        return MuClass.HALF_ODD_INTEGER
    return MuClass.NOT_HALF_INTEGER


# An Element is a finite rational linear combination of basis indices,
# kept canonical: no zero coefficients are ever stored.
Element = dict


def scale_element(el: Element, c: Fraction) -> Element:
    if not c:
        return {}
    return {b: c * v for b, v in el.items()}


def negate_element(el: Element) -> Element:
    return {b: -v for b, v in el.items()}


def add_elements(x: Element, y: Element) -> Element:
    out = dict(x)
    for b, v in y.items():
        s = out.get(b, 0) + v
        if s:
            out[b] = s
        else:
            out.pop(b, None)
    return out


def _single(family: Family, idx: Fraction, coeff) -> Element:
    coeff = Fraction(coeff)
    if not coeff:
        return {}
    return {BasisIndex(family, int(2 * idx)): coeff}


def bracket(a: BasisIndex, b: BasisIndex, params: Params) -> Element:
    """Lie bracket of two basis elements, as a (monomial) Element."""
    if a.family > b.family:
        return negate_element(bracket(b, a, params))
    n, m = a.n, b.n
    fa, fb = a.family, b.family
    if fa is Family.L and fb is Family.L:
        return _single(Family.L, m + n, m - n)
    if fa is Family.L and fb is Family.Y:
        return _single(Family.Y, m + n, m - (params.lam + 1) * n / 2 + params.mu)
    if fa is Family.L and fb is Family.M:
        return _single(Family.M, m + n, m - params.lam * n + 2 * params.mu)
    if fa is Family.Y and fb is Family.Y:
        return _single(Family.M, m + n, m - n)
    # Y-M and M-M commute
    return {}


def bracket_elements(x: Element, y: Element, params: Params) -> Element:
    out: Element = {}
    for a, ca in x.items():
        for b, cb in y.items():
            out = add_elements(out, scale_element(bracket(a, b, params), ca * cb))
    return out


def degree(b: BasisIndex, params: Params) -> Fraction:
    """Eigenvalue of ad L_0 on b."""
    if b.family is Family.L:
        return b.n
    if b.family is Family.Y:
        return b.n + params.mu
    return b.n + 2 * params.mu


def jacobi_defect(a: BasisIndex, b: BasisIndex, c: BasisIndex, params: Params) -> Element:
    """[[a,b],c] + [[b,c],a] + [[c,a],b]; zero for every triple."""
    out: Element = {}
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        out = add_elements(out, bracket_elements(bracket(x, y, params), {z: Fraction(1)}, params))
    return out


def enumerate_window(N: int) -> list:
    """All L_n, M_n with |n| <= N and Y_p with |p| <= N + 1/2, in basis order."""
    if N < 1:
        raise ValueError("window size must be >= 1")
    out = [L(n) for n in range(-N, N + 1)]
    out += [BasisIndex(Family.Y, k) for k in range(-2 * N - 1, 2 * N + 2, 2)]
    out += [M(n) for n in range(-N, N + 1)]
    return out
