"""Subspace arrangements and phase retrieval by projections.

An arrangement does phase retrieval exactly when, for every nonzero x, the
projected vectors P_i x span R^d. A single x whose projections fail to span
is therefore an exact certificate of failure; this module builds and checks
such certificates. Proving the positive direction needs real algebraic
geometry and is left to numerical evidence (see :mod:`phaselab.search`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from . import linalg
from .frames import Frame, full_spark
from .linalg import DEFAULT_EPS, EXACT, FLOAT
from .simplex import feasible_point


@dataclass(frozen=True, eq=False)
class Subspace:
    """A proper nonzero subspace of R^d.

    Give exactly one of ``normal`` (a hyperplane φ⊥) or ``basis`` (spanning
    vectors, one per row, linearly independent). The projector is built
    without square roots, so rational input stays rational.
    """

    normal: np.ndarray | None = None
    basis: np.ndarray | None = None
    backend: str | None = None
    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if (self.normal is None) == (self.basis is None):
            raise ValueError("give exactly one of normal= or basis=")
        raw = self.normal if self.normal is not None else self.basis
        backend = self.backend or linalg.infer_backend(raw)
        object.__setattr__(self, "backend", backend)
        if self.normal is not None:
            phi = linalg.as_array(self.normal, backend)
            if phi.ndim != 1 or phi.shape[0] < 2:
                raise ValueError("a hyperplane normal must be a vector in dimension >= 2")
            if linalg.all_zero(phi, self.eps):
                raise ValueError("zero normal vector does not define a hyperplane")
            phi.setflags(write=False)
            object.__setattr__(self, "normal", phi)
        else:
            b = linalg.as_array(self.basis, backend)
            if b.ndim != 2:
                raise ValueError("basis must be a list of vectors")
            k, d = b.shape
            r = linalg.rank(b, self.eps)
            if r != k:
                raise ValueError(f"basis vectors are dependent: rank {r} < {k}")
            if not 1 <= k <= d - 1:
                raise ValueError(f"subspace must be proper and nonzero, got dimension {k} in R^{d}")
            b.setflags(write=False)
            object.__setattr__(self, "basis", b)

    @property
    def is_hyperplane(self) -> bool:
        return self.normal is not None

    @property
    def dim(self) -> int:
        """Ambient dimension d."""
        return self.normal.shape[0] if self.normal is not None else self.basis.shape[1]

    @property
    def k(self) -> int:
        """Dimension of the subspace itself."""
        return self.dim - 1 if self.normal is not None else self.basis.shape[0]

    @cached_property
    def projector(self) -> np.ndarray:
        if self.normal is not None:
            p = linalg.projector_hyperplane(self.normal, self.eps)
        else:
            p = linalg.projector_span(self.basis.T, self.eps)
        p.setflags(write=False)
        return p

    def spanning_vectors(self) -> np.ndarray:
        if self.basis is not None:
            return self.basis
        return nullspace_rows(self.normal.reshape(1, -1), self.eps)


def nullspace_rows(a: np.ndarray, eps: float = DEFAULT_EPS) -> np.ndarray:
    return linalg.nullspace(a, eps).T


def perp(w: Subspace) -> Subspace:
    """Orthogonal complement. Lines come back as hyperplanes and vice versa."""
    if w.normal is not None:
        return Subspace(basis=w.normal.reshape(1, -1), backend=w.backend, eps=w.eps)
    if w.k == 1:
        return Subspace(normal=w.basis[0], backend=w.backend, eps=w.eps)
    return Subspace(basis=nullspace_rows(w.basis, w.eps), backend=w.backend, eps=w.eps)


@dataclass(frozen=True, eq=False)
class Arrangement:
    """An ordered family of proper subspaces of a common R^d."""

    subspaces: tuple[Subspace, ...]

    def __post_init__(self):
        subs = tuple(self.subspaces)
        if not subs:
            raise ValueError("an arrangement needs at least one subspace")
        dims = {s.dim for s in subs}
        if len(dims) != 1:
            raise ValueError(f"subspaces live in different dimensions: {sorted(dims)}")
        backends = {s.backend for s in subs}
        if len(backends) != 1:
            raise ValueError("mixed exact and float subspaces")
        object.__setattr__(self, "subspaces", subs)

    @classmethod
    def hyperplanes(cls, normals, backend: str | None = None, eps: float = DEFAULT_EPS) -> "Arrangement":
        if backend is None:
            backend = linalg.infer_backend(normals)
        return cls(tuple(Subspace(normal=v, backend=backend, eps=eps) for v in normals))

    @property
    def dim(self) -> int:
        return self.subspaces[0].dim

    @property
    def backend(self) -> str:
        return self.subspaces[0].backend

    @property
    def eps(self) -> float:
        return self.subspaces[0].eps

    @property
    def all_hyperplanes(self) -> bool:
        return all(s.is_hyperplane for s in self.subspaces)

    def __len__(self) -> int:
        return len(self.subspaces)

    def __getitem__(self, i) -> Subspace:
        return self.subspaces[i]

    def __iter__(self):
        return iter(self.subspaces)

    @cached_property
    def projectors(self) -> tuple[np.ndarray, ...]:
        return tuple(s.projector for s in self.subspaces)

    def normals(self) -> np.ndarray:
        if not self.all_hyperplanes:
            raise ValueError("arrangement contains non-hyperplanes")
        return np.array([s.normal for s in self.subspaces])

    def as_backend(self, backend: str) -> "Arrangement":
        if backend == self.backend:
            return self
        out = []
        for s in self.subspaces:
            if s.normal is not None:
                raw = s.normal.astype(float) if backend == FLOAT else s.normal
                out.append(Subspace(normal=raw, backend=backend, eps=s.eps))
            else:
                raw = s.basis.astype(float) if backend == FLOAT else s.basis
                out.append(Subspace(basis=raw, backend=backend, eps=s.eps))
        return Arrangement(tuple(out))


def arrangement_from_perps(frame: Frame) -> Arrangement:
    """The hyperplanes φ_i⊥ induced by a frame."""
    return Arrangement(tuple(Subspace(normal=v, backend=frame.backend, eps=frame.eps) for v in frame))


def perp_arrangement(arr: Arrangement) -> Arrangement:
    return Arrangement(tuple(perp(s) for s in arr))


@dataclass(frozen=True)
class EdidinWitness:
    """Rank of the stacked projections P_i x at one nonzero x.

    A deficient witness (rank < d) proves the arrangement fails phase
    retrieval; on the exact backend the proof is literal.
    """

    x: tuple
    rank: int
    dim: int
    backend: str = EXACT

    @property
    def spans(self) -> bool:
        return self.rank == self.dim

    @property
    def deficient(self) -> bool:
        return self.rank < self.dim


def stacked_projections(arr: Arrangement, x) -> np.ndarray:
    """The n×d matrix whose rows are P_i x."""
    xv = linalg.as_array(x, arr.backend)
    return np.array([p @ xv for p in arr.projectors], dtype=xv.dtype)


def edidin_verify_witness(arr: Arrangement, x) -> EdidinWitness:
    xv = linalg.as_array(x, arr.backend)
    if xv.shape != (arr.dim,):
        raise ValueError(f"x must have length {arr.dim}")
    if linalg.all_zero(xv, arr.eps):
        raise ValueError("x must be nonzero")
    r = linalg.rank(stacked_projections(arr, xv), arr.eps)
    return EdidinWitness(tuple(xv.tolist()), r, arr.dim, arr.backend)


def _require_hyperplanes(arr: Arrangement) -> None:
    if not arr.all_hyperplanes:
        raise ValueError("operation requires an arrangement of hyperplanes")


def edidin_small_n_witness(arr: Arrangement) -> EdidinWitness:
    """Deficient witness for at most 2d-3 hyperplanes.

    Any nonzero x in the intersection of the first d-1 hyperplanes is fixed by
    their projectors, leaving at most d-1 distinct projected vectors.
    """
    _require_hyperplanes(arr)
    n, d = len(arr), arr.dim
    if n > 2 * d - 3:
        raise ValueError(f"needs n <= 2d-3 = {2 * d - 3}, got n={n}")
    normals = arr.normals()[: min(d - 1, n)]
    x = linalg.nullspace(normals, arr.eps)[:, 0]
    return edidin_verify_witness(arr, x)


def minimal_fullspark_necessity(arr: Arrangement) -> EdidinWitness | None:
    """With exactly 2d-2 hyperplanes, phase retrieval forces full spark normals.

    Returns None when the normals are full spark. Otherwise x is taken
    orthogonal to a dependent d-subset of normals, which leaves at most d-1
    distinct projected vectors, and the verified deficient witness is returned.
    """
    _require_hyperplanes(arr)
    n, d = len(arr), arr.dim
    if n != 2 * d - 2:
        raise ValueError(f"needs exactly 2d-2 = {2 * d - 2} hyperplanes, got {n}")
    normals = arr.normals()
    spark = full_spark(Frame(normals, arr.backend, arr.eps))
    if spark.full_spark:
        return None
    x = linalg.nullspace(normals[list(spark.dependent)], arr.eps)[:, 0]
    return edidin_verify_witness(arr, x)


@dataclass(frozen=True)
class WeightedTightness:
    """``sum a_i² P_i = bound·I`` and ``sum a_i² (I - P_i) = complement_bound·I``."""

    bound: object
    complement_bound: object


def weighted_tight_check(arr: Arrangement, weights: Sequence) -> WeightedTightness | None:
    if len(weights) != len(arr):
        raise ValueError(f"expected {len(arr)} weights, got {len(weights)}")
    backend, eps, d = arr.backend, arr.eps, arr.dim
    a2 = [w * w for w in linalg.as_array(list(weights), backend)]
    eye = linalg.identity(d, backend)
    total = linalg.zeros((d, d), backend)
    for c, p in zip(a2, arr.projectors):
        total = total + c * p
    bound = linalg.trace(total) / d
    if linalg.is_zero(bound, eps) or not linalg.equal(total, bound * eye, eps):
        return None
    mass = sum(a2, Fraction(0) if backend == EXACT else 0.0)
    complement = linalg.zeros((d, d), backend)
    for c, p in zip(a2, arr.projectors):
        complement = complement + c * (eye - p)
    comp_bound = mass - bound
    if not linalg.equal(complement, comp_bound * eye, eps):
        raise ArithmeticError("complement identity violated; projectors are inconsistent")
    if linalg.is_zero(comp_bound, eps) or comp_bound < 0:
        raise ArithmeticError("proper subspaces must leave a positive complement bound")
    return WeightedTightness(bound, comp_bound)


def fusion_scalability(arr: Arrangement) -> tuple | None:
    """Exact nonnegative weights with ``sum c_i P_i = I``, or None.

    A certificate implies that both the arrangement and its perps do norm
    retrieval; that consequence is not re-verified here.
    """
    d = arr.dim
    projs = [linalg.as_array(p, EXACT) for p in arr.projectors]
    pairs = [(j, k) for j in range(d) for k in range(j, d)]
    a = [[p[j, k] for p in projs] for j, k in pairs]
    b = [Fraction(int(j == k)) for j, k in pairs]
    c = feasible_point(a, b)
    return None if c is None else tuple(c)


@dataclass(frozen=True)
class ZMember:
    """Residuals ℓ_j = Tr(P_j Q) and rank of a symmetric Q."""

    q: np.ndarray
    residuals: tuple
    rank: int
    member: bool


def z_residuals(arr: Arrangement, q: np.ndarray) -> tuple:
    """ℓ_j = Tr(Q) − φ_jᵀQφ_j/‖φ_j‖², kept rational for integer normals."""
    tr = linalg.trace(q)
    out = []
    for s in arr:
        phi = s.normal
        out.append(tr - (phi @ q @ phi) / (phi @ phi))
    return tuple(out)


def z_membership(arr: Arrangement, q) -> ZMember:
    """Is Q in the set of rank ≤ 2 symmetric matrices killed by every Tr(P_j ·)?"""
    _require_hyperplanes(arr)
    qa = linalg.as_array(q, arr.backend)
    if qa.shape != (arr.dim, arr.dim):
        raise ValueError(f"Q must be {arr.dim}x{arr.dim}")
    if not linalg.is_symmetric(qa, arr.eps):
        raise ValueError("Q must be symmetric")
    res = z_residuals(arr, qa)
    r = linalg.rank(qa, arr.eps)
    member = r <= 2 and all(linalg.is_zero(v, arr.eps) for v in res)
    return ZMember(qa, res, r, member)
