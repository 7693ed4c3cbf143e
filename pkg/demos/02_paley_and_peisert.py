"""
Paley and Peisert graphs
========================

Both graphs live on GF(q) and are strongly regular with the same parameters.
They coincide at q = 9 and separate at q = 49.
"""

from paleydesigns import (GF, build_paley, build_peisert, complement_map, find_isomorphism,
                          k4_fast, verify_srg)

g = build_paley(GF(13))
print(g, "neighbours of 0:", g.neighbors(0).tolist())
print("SRG parameters:", verify_srg(g).as_tuple())

# x -> 2x swaps edges and non-edges (2 is a non-square mod 13)
print("complementing map:", complement_map(g).tolist())

pa, pe = build_paley(GF(3, 2)), build_peisert(GF(3, 2))
perm = find_isomorphism(pa.adjacency, pe.adjacency)
print("q=9 isomorphism Paley -> Peisert:", perm.tolist())

pa, pe = build_paley(GF(7, 2)), build_peisert(GF(7, 2))
print("q=49 SRG:", verify_srg(pa).as_tuple(), verify_srg(pe).as_tuple())
print("q=49 k4: Paley", k4_fast(pa), "Peisert", k4_fast(pe))
