"""Tour of the deformed algebra: brackets, the grading, and the Jacobi identity.

The algebra is spanned by L_n, M_n (integer n) and Y_p (half-odd-integer p),
with two rational deformation parameters lambda and mu. Everything below is
exact rational arithmetic, no floats anywhere.
"""

from fractions import Fraction as F

from svalgebra import L, M, Params, Y, bracket, degree, enumerate_window, jacobi_defect


def show(a, b, p):
    out = bracket(a, b, p)
    terms = " + ".join(f"{v}*{k}" for k, v in sorted(out.items())) or "0"
    print(f"  [{a}, {b}] = {terms}")


p = Params(F(1, 2), F(1, 3))
print(f"parameters: lambda = {p.lam}, mu = {p.mu}")

print("\nsample brackets:")
show(L(1), L(2), p)
show(L(2), Y(F(1, 2)), p)
show(Y(F(-1, 2)), Y(F(3, 2)), p)
show(L(-1), M(3), p)
show(M(1), M(2), p)

print("\nthe grading is the ad L_0 eigenvalue:")
for b in (L(2), Y(F(1, 2)), M(-1)):
    print(f"  deg {b} = {degree(b, p)}")
    show(L(0), b, p)

print("\nJacobi identity on every triple of a small window:")
window = enumerate_window(3)
count = sum(
    1
    for i, a in enumerate(window)
    for j in range(i + 1, len(window))
    for k in range(j + 1, len(window))
    if jacobi_defect(a, window[j], window[k], p) == {}
)
total = len(window) * (len(window) - 1) * (len(window) - 2) // 6
print(f"  {count} of {total} triples have vanishing Jacobi defect")
