"""
Scalable frames and exact certificates
======================================

A frame is scalable when nonnegative weights c_i make sum c_i φ_i φ_iᵀ the
identity. Feasibility is an exact linear program, so a positive answer
comes with a rational certificate and a negative one is final.
"""

from phaselab import Frame, scalability
from phaselab.examples import gen_rd_family
from phaselab.frames import certificate_residual

four = Frame([[1, 0], [0, 1], [1, 1], [1, -1]])
cert = scalability(four)
print("weights:", [str(c) for c in cert.weights])
print("residual:\n", certificate_residual(four, cert))

# a rotated orthonormal basis with rational entries
rot = Frame([["3/5", "4/5"], ["-4/5", "3/5"]])
print("rotation weights:", [str(c) for c in scalability(rot).weights])

# the d = 3 family does phase retrieval, its perps do not, and it is not scalable
fam = gen_rd_family(3).obj
print("d = 3 family scalable:", scalability(fam) is not None)
