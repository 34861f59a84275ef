"""
Searching for failures numerically
==================================

Failures of phase retrieval are measure zero, so the search minimizes the
smallest singular value of the stacked projections instead of sampling.
Anything found is rounded to rationals and re-verified exactly; an empty
search is evidence, never proof.
"""

from phaselab import arrangement_from_perps, edidin_numeric_falsify, z_random_probe
from phaselab.examples import gen_r3_hyperplane_quintet, gen_r3_quintet, gen_r4_six_hyperplanes

# perps of the quintet fail; the search finds a witness
perps = arrangement_from_perps(gen_r3_quintet().obj)
rep = edidin_numeric_falsify(perps, restarts=20, seed=7)
print("quintet perps: sigma", f"{rep.min_sigma:.2e}", "witness", rep.witness.x, rep.certainty)

# the five planes: no witness, and the margin stays well away from zero
rep = edidin_numeric_falsify(gen_r3_hyperplane_quintet().obj, restarts=50, seed=7)
print("planes: sigma", round(rep.min_sigma, 4), "witness", rep.witness, rep.certainty)

# six hyperplanes in R^4
six = gen_r4_six_hyperplanes().obj
rep = edidin_numeric_falsify(six, restarts=100, seed=7)
print("six hyperplanes: sigma", round(rep.min_sigma, 5), "witness", rep.witness)
probe = z_random_probe(six, trials=200, seed=7)
print("rank <= 2 probe:", probe.exact_members, "exact members, smallest residual", round(probe.min_residual, 5))
