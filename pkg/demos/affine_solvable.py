"""
Solvable but not nilpotent: a graded subalgebra of affine sl2
==============================================================

The subalgebra is infinite-dimensional, so it is described by a degree
pattern and the computation is certified up to a truncation height.
"""

from kacmoody import GCM, build
from kacmoody import subalgebra as S

H = 10
g = build(GCM([[2, -2], [-2, 2]]), H=H)

# L: the null root space plus every root space n*delta + alpha_1, n >= 0
pattern = {"base_degree": [1, 0], "step_degree": [1, 1], "from": 0}
L = S.subalgebra_from_fixture(g, {"generators": ["[e1,e2]"], "patterns": [pattern]})
print("L up to height", H, ":", sorted(L.degrees()))

# each step of the lower central series drops the lowest degree, forever
lc = S.series(L, S.LOWER_CENTRAL, max_steps=5)
for k, profile in enumerate(lc.steps[:5]):
    print(f"  L^{k}:", sorted(profile))
print("lower central:", lc.to_dict()["verdict"])

# adding the derivation d2 (delta(d2) = 1, alpha_1(d2) = 0) gives a
# subalgebra whose derived series dies after three steps
Lhat = S.subalgebra_from_fixture(
    g, {"generators": ["[e1,e2]", "d2"], "patterns": [pattern]})
der = S.series(Lhat, S.DERIVED, max_steps=5)
for k, profile in enumerate(der.steps):
    print(f"  Lhat^({k}):", sorted(profile))
print("derived:", der.to_dict()["verdict"])

verdict = S.solvability_verdict(Lhat)
print("solvable:", verdict.solvable)
print("second derived algebra nilpotent:", verdict.second_derived_nilpotent)
print("consistency:", verdict.consistency)

# d2 acts nontrivially on g_Psi, so the local finiteness conditions fail
print(S.check_locally_finite_structure(Lhat).check("psi_commutes_with_im"))
