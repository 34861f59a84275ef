import numpy as np
import pytest

from phaselab import linalg
from phaselab.examples import R3_HYPERPLANE_BASES, gen_r3_quintet
from phaselab.linalg import EXACT
from phaselab.search import (
    EVIDENCE,
    PROOF,
    edidin_numeric_falsify,
    rationalize,
    worker_count,
    z_random_probe,
)
from phaselab.subspaces import Arrangement, Subspace, arrangement_from_perps, z_membership

from oracles import hyperplane_projector, matvec, sympy_rank


def test_rationalize_recovers_small_integer_directions():
    x = np.array([1.0, -2.0, 3.0]) / np.sqrt(14)
    assert rationalize(x) == (1, -2, 3)
    assert rationalize(-x) == (-1, 2, -3)
    assert rationalize(np.zeros(3)) == (0, 0, 0)
    assert rationalize([0.5, 0.25 + 1e-13]) == (2, 1)


def test_worker_count_reads_environment(monkeypatch):
    monkeypatch.setenv("PHASELAB_THREADS", "4")
    assert worker_count() == 4
    monkeypatch.setenv("PHASELAB_THREADS", "junk")
    assert worker_count() == 1
    assert worker_count(0) == 1


def test_falsifier_proves_failure_of_too_few_hyperplanes():
    arr = Arrangement.hyperplanes([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 1]], EXACT)
    rep = edidin_numeric_falsify(arr, restarts=10, seed=1)
    assert rep.witness is not None and rep.witness.deficient
    assert rep.certainty == PROOF
    normals = [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 1]]
    rows = [matvec(hyperplane_projector(phi), rep.witness.x) for phi in normals]
    assert sympy_rank(rows) < 4


def test_falsifier_finds_quintet_perp_failure_on_float_backend():
    arr = arrangement_from_perps(gen_r3_quintet().obj)
    rep = edidin_numeric_falsify(arr, restarts=50, seed=7)
    assert rep.min_sigma < 1e-8
    assert rep.witness is not None and rep.witness.deficient
    assert rep.certainty == EVIDENCE


def test_falsifier_reports_positive_margin_for_planes():
    arr = Arrangement(tuple(Subspace(basis=b, backend=EXACT) for b in R3_HYPERPLANE_BASES))
    rep = edidin_numeric_falsify(arr, restarts=20, seed=3)
    assert rep.witness is None
    assert rep.min_sigma > 0.1
    assert rep.certainty == EVIDENCE


def test_falsifier_is_deterministic_across_worker_counts():
    arr = Arrangement.hyperplanes([[1, 2, 0], [0, 1, -1], [3, 0, 1], [1, 1, 1], [2, -1, 1]], EXACT)
    a = edidin_numeric_falsify(arr, restarts=16, seed=42, workers=1)
    b = edidin_numeric_falsify(arr, restarts=16, seed=42, workers=4)
    assert a.to_dict() == b.to_dict()
    c = edidin_numeric_falsify(arr, restarts=16, seed=42, workers=1)
    assert a.to_dict() == c.to_dict()


def test_falsifier_report_sigma_matches_best_x():
    arr = Arrangement.hyperplanes([[1, 2, 0], [0, 1, -1], [3, 0, 1], [1, 1, 1], [2, -1, 1]], EXACT)
    rep = edidin_numeric_falsify(arr, restarts=8, seed=0)
    projs = np.array([np.asarray(p, dtype=float) for p in arr.projectors])
    x = np.array(rep.best_x)
    assert np.linalg.norm(x) == pytest.approx(1.0)
    sigma = np.linalg.svd(projs @ x, compute_uv=False)[-1]
    assert sigma == pytest.approx(rep.min_sigma, abs=1e-12)


def test_z_probe_finds_exact_members_for_three_hyperplanes_in_r4():
    arr = Arrangement.hyperplanes([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 1]], EXACT)
    rep = z_random_probe(arr, trials=20, seed=0)
    assert rep.exact_members > 0
    q = rep.example
    assert not linalg.all_zero(q)
    assert z_membership(arr, q).member


def test_z_probe_is_reproducible():
    arr = Arrangement.hyperplanes([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]], EXACT)
    a = z_random_probe(arr, trials=30, seed=9)
    b = z_random_probe(arr, trials=30, seed=9)
    assert a.to_dict() == b.to_dict()


def test_z_probe_requires_hyperplanes():
    arr = Arrangement((Subspace(basis=[[1, 0, 0]], backend=EXACT),))
    with pytest.raises(ValueError):
        z_random_probe(arr, trials=1)
