"""Recover the Virasoro central charge cocycle from the constraint solver.

Restricting the unknowns to L-L pairs, the cocycle conditions on a truncated
window leave a two-dimensional solution space spanned by the tails n and n^3.
The linear tail is the coboundary of the delta functional at L_0; the cubic
part survives to cohomology and matches (n^3 - n)/12 up to scale.
"""

from fractions import Fraction as F

from svalgebra import KnownCocycleId, Params, solve_h2
from svalgebra.algebra import Family, L
from svalgebra.cocycles import known_cocycle_value

p = Params(F(5, 2), F(-2, 3))
report = solve_h2(p, 10, 6, families=(Family.L,))

print(f"L-family restriction at lambda={p.lam}, mu={p.mu}:")
print(f"  cocycle space dimension    {report.cocycle_dim}")
print(f"  coboundary space dimension {report.coboundary_dim}")
print(f"  h2 dimension               {report.h2_dim}")
print(f"  stabilized across windows  {report.stabilized}")
for cid, ok in report.matched:
    print(f"  surviving class matches {cid.value}: {ok}")

print("\nthe class itself, xi(L_n, L_-n) = (n^3 - n)/12:")
for n in range(1, 6):
    v = known_cocycle_value(KnownCocycleId.VIR, p, L(n), L(-n))
    print(f"  xi(L_{n}, L_{-n}) = {v}")
