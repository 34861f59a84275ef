"""
Hyperplanes, perps and the rank test
====================================

Subspaces W_1..W_n do phase retrieval exactly when the vectors P_i x span
R^d for every nonzero x. One x where they do not is a proof of failure,
checked here in exact arithmetic.
"""

from phaselab import (
    Arrangement,
    arrangement_from_perps,
    edidin_small_n_witness,
    edidin_verify_witness,
    fusion_scalability,
    minimal_fullspark_necessity,
    weighted_tight_check,
)
from phaselab.examples import gen_r3_hyperplane_quintet, gen_rd_family
from phaselab.subspaces import stacked_projections

# perps of the d = 4 family: the all-ones vector is a witness
frame = gen_rd_family(4).obj
perps = arrangement_from_perps(frame)
w = edidin_verify_witness(perps, [1, 1, 1, 1])
print("perps of the d = 4 family at ones: rank", w.rank, "of", w.dim)

# five planes in R^3 given by spanning pairs; they span at a sample point
planes = gen_r3_hyperplane_quintet().obj
print(stacked_projections(planes, [1, 2, 3]))
print("rank at (1, 2, 3):", edidin_verify_witness(planes, [1, 2, 3]).rank)

# too few hyperplanes always fail, and the witness is constructive
small = Arrangement.hyperplanes([[1, 2, 0, 1], [0, 1, 1, 1], [3, 0, 1, 2], [1, 1, 1, 0], [2, 0, 0, 1]])
print("5 hyperplanes in R^4:", edidin_small_n_witness(small))

# with exactly 2d-2 hyperplanes, a dependent d-subset of normals is fatal
dep = Arrangement.hyperplanes([[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 3]])
print("dependent normals:", minimal_fullspark_necessity(dep))

# coordinate hyperplanes are tight: sum P_i = 2I and sum (I - P_i) = I
coords = Arrangement.hyperplanes([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
print(weighted_tight_check(coords, [1, 1, 1]))
print("fusion weights:", [str(c) for c in fusion_scalability(coords)])
