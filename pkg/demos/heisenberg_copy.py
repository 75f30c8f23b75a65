"""
A Heisenberg algebra inside a rank-3 Kac-Moody algebra
=======================================================

Two imaginary root vectors and one real root vector close up into a
three-dimensional nilpotent subalgebra.
"""

from kacmoody import GCM, build
from kacmoody import subalgebra as S

# two nodes joined by a double edge, both attached to a third node
a = GCM([[2, -2, -1], [-2, 2, -1], [-1, -1, 2]])
g = build(a, H=6)

# y lives in degree (1,1,1), where the root space is two-dimensional;
# this combination is killed by f1
y = g.parse("[e3,[e2,e1]] + 2*[e2,[e3,e1]]")
print("[f1, y] =", g.format(g.bracket(g.f(1), y)))

# reflect y along the first simple root and take its Chevalley dual
x = g.simple_reflection_star(1, y)
y_star = g.omega(y)
print("x  =", g.format(x), " degree", x.degree)
print("y* =", g.format(y_star))

# the only nonzero bracket lands on a multiple of e1
print("[y*, x] =", g.format(g.bracket(y_star, x)))
print("[e1, x] =", g.format(g.bracket(g.e(1), x)))

L = S.span_closure(g, [g.e(1), x, y_star])
print("dimension of the closure:", L.total_dim())

# lower central series: L, then span(e1), then zero
lc = S.series(L, S.LOWER_CENTRAL)
for k, profile in enumerate(lc.steps):
    print(f"  L^{k}:", {d: m for d, m in profile.items()})
print("verdict:", lc.to_dict()["verdict"])
