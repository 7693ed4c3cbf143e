"""
Character sums, bounds and asymptotics
======================================

k4 is also a normalised sum of products of quadratic characters.  The
normalising constant is fitted against the census rather than assumed.
"""

from paleydesigns import (GF, asymptotic_ratio, build_paley, common_neighborhood,
                          fit_normalization, k4_char_sum, k4_interval, thomason_check)

c = fit_normalization()
print("fitted normalisation:", c)
for q in (13, 17, 29, 37, 53):
    res = k4_char_sum(GF(q))
    print(f"  q={q:3d}  raw sum {res.raw_sum:6d}  k4 {res.k4_value}")

g = build_paley(GF(29))
rep = thomason_check(g, common_neighborhood(g, 0, 1))
print(f"\nedges in N(0)&N(1): {rep.edges}, centre {float(rep.center)}, "
      f"allowed deviation {rep.bound:.3f}")

for q, k4 in ((29, 203), (281, 3737300)):
    iv = k4_interval(q)
    print(f"q={q}: k4 in [{float(iv.lower):.1f}, {float(iv.upper):.1f}]? {iv.contains(k4)}; "
          f"1536 k4 / q^4 = {float(asymptotic_ratio(q, k4)):.4f}")
