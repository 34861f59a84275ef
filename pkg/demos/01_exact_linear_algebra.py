"""
Exact linear algebra on rationals
=================================

Rank, determinant and nullspace without rounding. Entries are Fractions
held in numpy object arrays; the float backend gives the same answers up to
a tolerance.
"""

import numpy as np

from phaselab import linalg

# rationals can be written as strings
m = linalg.as_array([[1, 0, 1], [0, 1, 1], [1, 1, 1]])
print("backend:", linalg.backend_of(m))
print("det:", linalg.det(m))

# a rank-deficient matrix and its nullspace
a = linalg.as_array([["1/2", 1, 0], [1, 2, 0], [0, 0, 3]])
print("rank:", linalg.rank(a))
null = linalg.nullspace(a)
print("nullspace basis column:", null[:, 0])
print("a @ null == 0:", linalg.all_zero(a @ null))

# the float path agrees with numpy
print("float rank:", linalg.rank(np.asarray(a, dtype=float)), np.linalg.matrix_rank(np.asarray(a, dtype=float)))

# orthogonal projection onto the plane normal to (1, -1, 0)
p = linalg.projector_hyperplane(linalg.as_array([1, -1, 0]))
print(p)
print("idempotent:", linalg.equal(p @ p, p), " trace:", linalg.trace(p))
