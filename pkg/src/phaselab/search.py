"""Numerical searches for phase retrieval failures of subspace arrangements.

Failures are measure-zero, so random sampling alone cannot find them; every
search here optimizes. The quantity minimized is the smallest singular value
of M(x), the matrix with rows P_i x, over unit x. Because P_i is symmetric,

    sigma_min(M(x)) = min over unit v of ||(xᵀ P_i v)_i||,

and the residual is bilinear in (x, v): fixing either side and taking the
smallest right singular vector is an exact block update. Each restart runs a
few such alternating sweeps and then a Gauss-Newton polish of the bilinear
residual, which converges quadratically onto exact zeros.

A small result followed by exact rational re-verification is a PROOF of
failure. A result bounded away from zero is EVIDENCE only.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

import numpy as np
from scipy.optimize import least_squares

from . import linalg
from .linalg import EXACT
from .subspaces import Arrangement, EdidinWitness, edidin_verify_witness, z_membership

#: Below this smallest singular value a candidate is sent to exact re-verification.
WITNESS_TAU = 1e-8
#: Largest denominator tried when rounding a candidate to a rational vector.
MAX_DENOMINATOR = 64

PROOF = "PROOF"
EVIDENCE = "EVIDENCE"


def worker_count(workers: int | None = None) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get("PHASELAB_THREADS", "1")))
    except ValueError:
        return 1


def rationalize(x, max_denominator: int = MAX_DENOMINATOR) -> tuple[int, ...]:
    """Round a direction to a primitive integer vector.

    The vector is scaled so its largest entry is ±1, each entry is replaced
    by its best continued-fraction approximation with bounded denominator,
    and denominators are cleared.
    """
    x = np.asarray(x, dtype=float)
    scale = np.max(np.abs(x))
    if scale == 0:
        return tuple(0 for _ in x)
    fr = [Fraction(float(v / scale)).limit_denominator(max_denominator) for v in x]
    m = lcm(*(f.denominator for f in fr))
    ints = [int(f * m) for f in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints) if g else tuple(ints)


def _smallest_right_singular(m: np.ndarray) -> tuple[float, np.ndarray]:
    _, s, vt = np.linalg.svd(m)
    return float(s[-1]) if len(s) == m.shape[1] else 0.0, vt[-1]


def _local_descent(projs: np.ndarray, x0: np.ndarray, sweeps: int = 20) -> tuple[np.ndarray, np.ndarray]:
    n, d, _ = projs.shape
    x = x0 / np.linalg.norm(x0)
    v = x
    for _ in range(sweeps):
        _, v = _smallest_right_singular(projs @ x)
        _, x = _smallest_right_singular(projs @ v)

    def residual(z):
        xs, vs = z[:d], z[d:]
        return np.concatenate([np.einsum("i,nij,j->n", xs, projs, vs), [xs @ xs - 1.0, vs @ vs - 1.0]])

    method = "lm" if n + 2 >= 2 * d else "trf"
    tol = 1e-15 if method == "lm" else 1e-14
    sol = least_squares(residual, np.concatenate([x, v]), method=method, xtol=tol, ftol=tol, gtol=tol)
    x, v = sol.x[:d], sol.x[d:]
    x = x / np.linalg.norm(x)
    _, v = _smallest_right_singular(projs @ x)
    return x, v


@dataclass(frozen=True)
class FalsifierReport:
    """Result of a multi-start search for an x whose projections fail to span.

    ``partner`` is the unit v attaining sigma_min at ``best_x``. By symmetry
    of the bilinear residual, a deficient x makes v deficient as well.
    """

    min_sigma: float
    best_x: tuple[float, ...]
    partner: tuple[float, ...]
    witness: EdidinWitness | None
    restarts: int
    seed: int
    tau: float = WITNESS_TAU
    certainty: str = EVIDENCE
    best_restart: int = 0

    def to_dict(self) -> dict:
        return {
            "min_sigma": self.min_sigma,
            "best_x": list(self.best_x),
            "partner": list(self.partner),
            "witness": None if self.witness is None else witness_dict(self.witness),
            "restarts": self.restarts,
            "seed": self.seed,
            "tau": self.tau,
            "best_restart": self.best_restart,
        }


def witness_dict(w: EdidinWitness) -> dict:
    return {"x": [str(v) for v in w.x], "rank": w.rank, "dim": w.dim, "deficient": w.deficient}


def _float_projectors(arr: Arrangement) -> np.ndarray:
    return np.array([np.asarray(p, dtype=float) for p in arr.projectors])


def _verify_candidate(arr: Arrangement, candidates) -> EdidinWitness | None:
    for cand in candidates:
        ints = rationalize(cand)
        if not any(ints):
            continue
        w = edidin_verify_witness(arr, list(ints))
        if w.deficient:
            return w
    return None


def edidin_numeric_falsify(
    arr: Arrangement,
    restarts: int = 200,
    seed: int = 0,
    tau: float = WITNESS_TAU,
    workers: int | None = None,
) -> FalsifierReport:
    """Multi-start minimization of sigma_min(M(x)) over unit x.

    Restart k draws its start from ``SeedSequence(seed).spawn`` child k, so the
    report is identical for any worker count. Ties are broken by the lowest
    restart index. When the minimum falls below ``tau`` the best x (and its
    partner v) are rounded to small rationals and re-verified; on an exact
    arrangement a deficient result is a PROOF.
    """
    projs = _float_projectors(arr)
    d = arr.dim
    children = np.random.SeedSequence(seed).spawn(restarts)

    def run(k: int):
        rng = np.random.default_rng(children[k])
        x, v = _local_descent(projs, rng.standard_normal(d))
        sigma, _ = _smallest_right_singular(projs @ x)
        return sigma, k, x, v

    n_workers = worker_count(workers)
    if n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            results = list(pool.map(run, range(restarts)))
    else:
        results = [run(k) for k in range(restarts)]
    sigma, k, x, v = min(results, key=lambda r: (r[0], r[1]))
    witness = None
    certainty = EVIDENCE
    if sigma <= tau:
        witness = _verify_candidate(arr, [x, v])
        if witness is not None and arr.backend == EXACT:
            certainty = PROOF
    return FalsifierReport(
        min_sigma=sigma,
        best_x=tuple(float(t) for t in x),
        partner=tuple(float(t) for t in v),
        witness=witness,
        restarts=restarts,
        seed=seed,
        tau=tau,
        certainty=certainty,
        best_restart=k,
    )


@dataclass(frozen=True)
class ZProbeReport:
    """Randomized search for nonzero members of the rank ≤ 2 zero set.

    ``min_residual`` is the smallest ||ℓ(Q)|| over normalized candidates
    (||Q||_F = 1). ``exact_members`` counts candidates that survived exact
    rational re-verification; ``example`` holds the first one as a matrix of
    Fractions.
    """

    trials: int
    seed: int
    min_residual: float
    exact_members: int
    example: np.ndarray | None = field(default=None, compare=False)
    exact_checked: bool = True

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "min_residual": self.min_residual,
            "exact_members": self.exact_members,
            "exact_checked": self.exact_checked,
            "example": None if self.example is None else [[str(v) for v in row] for row in self.example],
        }


def _exact_member(arr: Arrangement, u: tuple[int, ...]):
    """Exact nonzero Q = u vᵀ + v uᵀ in the zero set, if the rounded u admits one.

    Tr(P_j Q) = 2 uᵀ P_j v is linear in v once u is fixed, so members with
    this u are exactly the nullspace of the matrix with rows uᵀ P_j.
    """
    uv = linalg.as_array(list(u), EXACT)
    rows = np.array([uv @ p for p in arr.projectors], dtype=object)
    null = linalg.nullspace(rows)
    if null.shape[1] == 0:
        return None
    v = null[:, 0]
    q = np.outer(uv, v) + np.outer(v, uv)
    zm = z_membership(arr, q)
    if zm.member and not linalg.all_zero(q):
        return q
    return None


def z_random_probe(arr: Arrangement, trials: int = 1000, seed: int = 0, sweeps: int = 10) -> ZProbeReport:
    """Randomized evidence that the rank ≤ 2 zero set is {0}.

    Rank ≤ 2 symmetric candidates are written Q = xxᵀ − yyᵀ with
    x = (u+v)/√2 and y = (u−v)/√2, i.e. Q = u vᵀ + v uᵀ. Each trial draws a
    random u, projects onto the linear constraints Tr(P_j Q) = 0 in v by
    least squares (smallest singular vector), and refines (u, v) with a few
    alternating sweeps. Every candidate's u is then rounded to a small
    integer vector and checked exactly.
    """
    if not arr.all_hyperplanes:
        raise ValueError("z_random_probe requires an arrangement of hyperplanes")
    projs = _float_projectors(arr)
    d = arr.dim
    rng = np.random.default_rng(seed)
    best = np.inf
    members = 0
    example = None
    exact = arr.backend == EXACT
    seen: set[tuple[int, ...]] = set()
    for _ in range(trials):
        u = rng.standard_normal(d)
        u /= np.linalg.norm(u)
        for _ in range(sweeps):
            _, v = _smallest_right_singular(projs @ u)
            _, u = _smallest_right_singular(projs @ v)
        _, v = _smallest_right_singular(projs @ u)
        q = np.outer(u, v) + np.outer(v, u)
        q /= np.linalg.norm(q)
        ell = np.einsum("nij,ji->n", projs, q)
        best = min(best, float(np.linalg.norm(ell)))
        if exact:
            ints = rationalize(u)
            if ints in seen or not any(ints):
                continue
            seen.add(ints)
            found = _exact_member(arr, ints)
            if found is not None:
                members += 1
                if example is None:
                    example = found
    return ZProbeReport(trials, seed, best, members, example, exact)
