"""Mod-2 homology of small combinatorial models.

A complex is just a face-closed family of vertex subsets; build one from
its maximal simplices and ask for Betti numbers.  Everything is exact
GF(2) arithmetic, so the numbers are integers, not approximations.
"""

from virtbetti import SimplicialComplex, PairSpace
from virtbetti.models import circle, sphere, torus_minimal, projective_plane

print("A hollow triangle is a circle:")
k = circle(3)
print("  simplices:", sorted(k.simplices, key=k.sort_key))
print("  b =", tuple(k.betti_mod2()), " chi =", k.euler_characteristic())

print()
print("Boundary of a tetrahedron is a 2-sphere:")
s2 = sphere(2)
print("  b =", tuple(s2.betti_mod2()), " Poincare polynomial:", s2.poincare_polynomial())

print()
print("The 7-vertex torus and the 6-vertex projective plane:")
print("  torus b =", tuple(torus_minimal().betti_mod2()))
print("  projective plane b =", tuple(projective_plane().betti_mod2()),
      " (mod 2 sees the torsion)")

print()
print("Cohomology with compact supports of an open piece comes from a pair")
print("(compactification, complement).  The real line is a circle minus a point:")
pair = PairSpace(k, k.subcomplex(maximal=[("v0",)]))
print("  b_c =", tuple(pair.betti_compact_supports()),
      " chi_c =", pair.euler_compact_supports())

print()
print("A custom complex from scratch: two triangles sharing an edge")
m = SimplicialComplex.from_maximal(
    ("a", "b", "c", "d"), [("a", "b", "c"), ("b", "c", "d")]
)
print("  b =", tuple(m.betti_mod2()), " (a disk: contractible)")
