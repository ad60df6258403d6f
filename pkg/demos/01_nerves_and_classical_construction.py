"""Finite categories, nerves, and the classical Grothendieck construction.

Builds a small Cat-valued diagram, assembles its double category of mapping
path categories, passes to the horizontal structure, and checks the result
against the nerve-level relative nerve and against integral homology.
"""

from relnerve.certify import check_simplicial_identities, verify_iso_map
from relnerve.classic import (audit_double_category, double_category,
                              grothendieck_classic, nerve_comparison)
from relnerve.fincat import (CatDiagram, CatFunctor, FinCategory,
                             arrow_category, cyclic_group_category,
                             identity_functor, nerve, validate_category)
from relnerve.homology import format_homology, homology_table

print("== categories and nerves ==")
C = arrow_category()
print("the walking arrow [1]: %d objects, %d morphisms, violations: %r"
      % (C.n_objects, C.n_morphisms, validate_category(C)))
N = nerve(C, 3)
print("N([1]) simplex counts:", N.counts)
print(check_simplicial_identities(N, "N([1])").line())

Z2 = cyclic_group_category(2)
NZ = nerve(Z2, 4)
print("\nN(Z/2) simplex counts:", NZ.counts)
print("its homology is the classifying space of Z/2:")
for line in format_homology(homology_table(NZ, 3)):
    print("  " + line)

print("\n== the classical Grothendieck construction ==")
one = FinCategory(1, [0], [0], [0], {(0, 0): 0}, obj_names=["x"])
two = FinCategory(2, [0, 1], [0, 1], [0, 1],
                  {(0, 0): 0, (1, 1): 1}, obj_names=["y", "z"])
F = CatDiagram(C, [one, two],
               [identity_functor(one), CatFunctor(one, two, [0], [0]),
                identity_functor(two)])
print("diagram over [1] with F(0)={x}, F(1)={y,z}, F(f)(x)=y")
dd = double_category(F)
print("double-category audit violations:", audit_double_category(dd))
G = grothendieck_classic(F)
print("total category: %d objects, %d morphisms (3 identities + x->y)"
      % (len(G.objects), len(G.morphisms)))
print("object names:", G.total.obj_names)

print("\n== the commuting triangle with the relative nerve ==")
f, g, NG, R = nerve_comparison(G, 3)
print(verify_iso_map(f, g, "N(total) vs relative nerve of N o F").line())
