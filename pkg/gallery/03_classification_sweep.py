"""Sweep the parameter plane and compare h2 against the tabulated classification.

Each row is one (lambda, mu) cell: the solver computes dim H^2 on a truncated
window and the oracle column is the closed-form expectation. The regimes
differ by whether mu is an integer, a half-odd-integer, or neither, and by
the special lambda values -3, -1 and 1.

A handful of cells disagree by design: at lambda in {-3, -1} the solver finds
a different count than the tabulated one (an extra independent class at
lambda=-3, and a tabulated generator at lambda=-1 with integer mu that is
actually a coboundary). The disagreement is reproducible and exact.
"""

from fractions import Fraction as F

from svalgebra import Params, expected_h2, solve_h2

cells = [
    (0, F(1, 3)), (2, F(1, 4)),
    (2, F(1, 2)), (-5, F(1, 2)),
    (-3, F(1, 2)), (-1, F(1, 2)), (1, F(1, 2)),
    (0, 0), (2, 1), (-3, 0), (-1, 0),
]

print(f"{'lambda':>8} {'mu':>6} {'h2':>4} {'oracle':>7}  agree")
for lam, mu in cells:
    p = Params(lam, mu)
    r = solve_h2(p, 10, 6)
    want = expected_h2(p)[0]
    mark = "yes" if r.h2_dim == want else "NO"
    print(f"{str(p.lam):>8} {str(p.mu):>6} {r.h2_dim:>4} {want:>7}  {mark}")
