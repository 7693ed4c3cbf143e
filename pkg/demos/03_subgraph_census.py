"""
Four-vertex census
==================

Brute force classifies every 4-subset; the closed forms need only q and k4.
Edge-transitivity lets k4 be read off one common neighbourhood.
"""

from paleydesigns import (GF, brute_census, build_paley, census_from_k4, check_linear_relations,
                          k4_fast, triangle_counts)

g = build_paley(GF(29))
k4 = k4_fast(g)
brute = brute_census(g)
closed = census_from_k4(29, k4)

print(f"k4 = {k4}")
for (label, n), (_, m) in zip(brute.rows(), closed.rows()):
    print(f"  {label:6s} brute {n:6d}  closed form {m:6d}")
print("total", brute.total(), "complement symmetric:", brute.complement_symmetric())
print("linear relations:", check_linear_relations(29, brute))
print("triangles and induced 3-paths:", triangle_counts(g))
