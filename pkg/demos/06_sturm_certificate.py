"""
Counting real roots exactly
===========================

Sturm chains over the integers count distinct real roots without floating
point. The degree-10 polynomial f0 has 66-digit coefficients and no real
roots.
"""

from phaselab import IntPoly, count_real_roots, f0_dataset, sturm_chain
from phaselab.poly import f0_checksum, is_homogeneous, specialize, specialize_x44

p = IntPoly((-2, 0, 1))  # t^2 - 2
print([q.coeffs for q in sturm_chain(p)])
print("roots:", count_real_roots(p), " roots in (0, 2):", count_real_roots(p, (0, 2)))

# repeated roots are counted once
print("(t-1)^2 (t+3):", count_real_roots(IntPoly.from_roots([1, 1, -3])))

f0 = f0_dataset()
print("terms:", len(f0), " homogeneous of degree 10:", is_homogeneous(f0, 10))
print("sha256:", f0_checksum())
g = specialize(f0)
print("f0(1, t) degree", g.degree, "chain length", len(sturm_chain(g)))
print("real roots of f0(1, t):", count_real_roots(g))
print("real roots of f0(t, 1):", count_real_roots(specialize_x44(f0)))
