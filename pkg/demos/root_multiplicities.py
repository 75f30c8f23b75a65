"""
Root multiplicities of a hyperbolic algebra, three ways
=======================================================

The engine's root space dimensions are compared against the Peterson
recursion and against a literal Serre quotient of the free Lie algebra.
"""

from kacmoody import GCM, PetersonOracle, build, symmetrize
from kacmoody import roots as R
from kacmoody.serre import serre_dim

a = GCM([[2, -3], [-3, 2]])
s = symmetrize(a)
g = build(a, s, H=8)
peterson = PetersonOracle(a, s)

print(f"{'root':>8} {'kind':>22} {'norm':>5} {'engine':>7} {'peterson':>9} {'serre':>6}")
for beta, c in R.enumerate_positive_roots(a, s, 8):
    if beta[0] > beta[1]:
        continue  # the diagram symmetry swaps the coordinates
    serre = serre_dim(a, beta) if sum(beta) <= 6 else "-"
    print(f"{str(beta):>8} {c.kind:>22} {str(c.norm):>5} {g.mult(beta):>7} "
          f"{peterson.mult(beta):>9} {serre:>6}")

# every imaginary root is a Weyl translate of one in the fundamental cone
beta = (5, 2)
c = R.classify_root(a, s, beta)
print(beta, "reduces to", c.orbit_rep, "by the word", c.word)
