"""
Frames, full spark and the complement property
==============================================

Real phase retrieval for a frame is decided by the complement property:
for every split of the vectors, one side must span. Full spark families
with at least 2d-1 vectors always have it.
"""

from phaselab import Frame, complement_property, does_phase_retrieval, full_spark, is_tight
from phaselab.examples import gen_r3_quintet, gen_rd_family

# three vectors in the plane: the smallest phase retrieval frame
f = Frame([[1, 0], [0, 1], [1, 1]])
print("CP:", complement_property(f))

# replace (1, 1) by a multiple of e1 and the property fails
g = Frame([[1, 0], [0, 1], [2, 0]])
rep = complement_property(g)
print("CP:", rep.holds, " failing side (0-based):", rep.witness)

# the five-vector frame in R^3 with the irrational entry 1 - sqrt(2)
quintet = gen_r3_quintet().obj
print("quintet backend:", quintet.backend)
print("full spark:", full_spark(quintet).full_spark, " phase retrieval:", does_phase_retrieval(quintet).holds)

# exact rational family in R^d, here d = 5
bundle = gen_rd_family(5)
print(bundle.name, "with x values", bundle.params["xs"])
for name, (value, ok) in bundle.verify().items():
    print(f"  {name:30s} {value!s:6s} {'ok' if ok else 'MISMATCH'}")

print("tight bound of {e1, e2, e1+e2, e1-e2}:", is_tight(Frame([[1, 0], [0, 1], [1, 1], [1, -1]])))
