"""
Brute-force reconstruction
==========================

Recover ±x from |<x, φ_i>| by trying every sign pattern. This is slow but
independent of the complement property, which makes it a good cross-check.
"""

from phaselab import Frame, complement_property, measure, pr_empirical, reconstruct_brute
from phaselab.reconstruct import ambiguous_signal

f = Frame([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]])
meas = measure(f, ["1/2", -2, 3])
print("magnitudes:", [str(b) for b in meas.magnitudes])
print("recovered:", [[str(v) for v in y] for y in reconstruct_brute(f, meas)])
print("CP:", complement_property(f).holds, " empirical:", pr_empirical(f, trials=20))

# a frame without the complement property: the failing split builds two signals
g = Frame([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1]])
rep = complement_property(g)
x, y = ambiguous_signal(g, rep.witness)
print("witness:", rep.witness, " x =", list(x), " y =", list(y))
print("same magnitudes:", measure(g, list(x)).magnitudes == measure(g, list(y)).magnitudes)
