"""Finite frames in R^d and their vector-level phase retrieval checks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from . import linalg
from .linalg import DEFAULT_EPS, EXACT, FLOAT
from .simplex import feasible_point

#: Complement-property enumeration refuses frames larger than this by default.
CP_GUARD = 30


class GuardExceeded(RuntimeError):
    """An exponential enumeration was refused because the input is too large."""


@dataclass(frozen=True, eq=False)
class Frame:
    """An ordered family of nonzero vectors in R^d.

    ``vectors`` is stored as an ``(n, d)`` array, one vector per row. The
    backend is inferred from the entries unless given. Duplicates are
    allowed; zero vectors are not.
    """

    vectors: np.ndarray
    backend: str | None = None
    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if self.backend is None:
            object.__setattr__(self, "backend", linalg.infer_backend(self.vectors))
        arr = linalg.as_array(self.vectors, self.backend)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"a frame needs at least one vector of positive dimension, got shape {arr.shape}")
        for i, v in enumerate(arr):
            if linalg.all_zero(v, self.eps):
                raise ValueError(f"vector {i} is zero")
        arr.setflags(write=False)
        object.__setattr__(self, "vectors", arr)

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def __len__(self) -> int:
        return self.vectors.shape[0]

    def __getitem__(self, i):
        return self.vectors[i]

    def __iter__(self):
        return iter(self.vectors)

    @cached_property
    def frame_operator(self) -> np.ndarray:
        s = self.vectors.T @ self.vectors
        s.setflags(write=False)
        return s

    @cached_property
    def _int_rows(self) -> list[list[int]] | None:
        if self.backend != EXACT:
            return None
        return linalg.integer_rows(self.vectors)

    def subset_rank(self, indices: Sequence[int]) -> int:
        if not indices:
            return 0
        if self._int_rows is not None:
            return linalg.rank_int([self._int_rows[i] for i in indices])
        return linalg.rank(self.vectors[list(indices)], self.eps)

    def as_backend(self, backend: str) -> "Frame":
        if backend == self.backend:
            return self
        if backend == FLOAT:
            return Frame(self.vectors.astype(float), FLOAT, self.eps)
        return Frame(linalg.as_array(self.vectors, EXACT), EXACT, self.eps)


@dataclass(frozen=True)
class ScalabilityCertificate:
    """Weights with ``sum(c_i φ_i φ_iᵀ) = bound * I``."""

    weights: tuple
    bound: Fraction = Fraction(1)


@dataclass(frozen=True)
class CPReport:
    """Outcome of a complement-property check.

    ``witness`` is a tuple of 0-based indices I such that neither the vectors
    in I nor those in the complement span R^d; it is None when the property
    holds.
    """

    holds: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class SparkReport:
    full_spark: bool
    dependent: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.full_spark


def is_frame(frame: Frame) -> bool:
    """In finite dimensions a family is a frame exactly when it spans."""
    return frame.subset_rank(range(len(frame))) == frame.dim


def frame_operator(frame: Frame) -> np.ndarray:
    return frame.frame_operator


def is_tight(frame: Frame):
    """Return the tight bound A if the frame operator equals A·I, else None."""
    s = frame.frame_operator
    d = frame.dim
    a = linalg.trace(s) / d
    target = linalg.identity(d, frame.backend) * a
    if linalg.equal(s, target, frame.eps):
        return a
    return None


def full_spark(frame: Frame) -> SparkReport:
    """Check that every d-subset is a basis.

    On failure the lexicographically first dependent subset is reported.
    """
    n, d = len(frame), frame.dim
    if n < d:
        raise ValueError(f"full spark needs n >= d, got n={n}, d={d}")
    rows = frame._int_rows
    for subset in itertools.combinations(range(n), d):
        if rows is not None:
            singular = linalg.det_int([rows[i] for i in subset]) == 0
        else:
            singular = linalg.rank(frame.vectors[list(subset)], frame.eps) < d
        if singular:
            return SparkReport(False, subset)
    return SparkReport(True, None)


def _subsets_with_first(n: int):
    """Subsets of range(n) containing 0, largest first, lexicographic within a size."""
    rest = range(1, n)
    for size in range(n, 0, -1):
        for tail in itertools.combinations(rest, size - 1):
            yield (0,) + tail


def complement_property(frame: Frame, allow_large: bool = False) -> CPReport:
    """Decide the complement property by enumerating complementary pairs.

    Each pair is visited once through the side containing index 0. Sides
    with fewer than d vectors cannot span and skip the rank test. The
    reported witness is the first failing side in the order: larger sides
    first, then lexicographic. Enlarging a failing side while it stays
    non-spanning keeps the pair failing, so this order reports a maximal
    non-spanning side.
    """
    n, d = len(frame), frame.dim
    if n > CP_GUARD and not allow_large:
        raise GuardExceeded(f"complement property on n={n} > {CP_GUARD} vectors needs allow_large=True")
    full = frozenset(range(n))
    for subset in _subsets_with_first(n):
        if len(subset) >= d and frame.subset_rank(subset) == d:
            continue
        comp = sorted(full.difference(subset))
        if len(comp) >= d and frame.subset_rank(comp) == d:
            continue
        return CPReport(False, subset)
    return CPReport(True, None)


def does_phase_retrieval(frame: Frame, allow_large: bool = False) -> CPReport:
    """Real phase retrieval, decided through the complement property.

    Phase retrieval and phaseless reconstruction are treated as one
    predicate. Fewer than 2d-1 vectors fail immediately; the witness then is
    the first d-1 indices, since neither side can reach d vectors. A full
    spark family with at least 2d-1 vectors has the complement property
    without enumeration.
    """
    n, d = len(frame), frame.dim
    if n < 2 * d - 1:
        return CPReport(False, tuple(range(min(d - 1, n))) or (0,))
    if full_spark(frame):
        return CPReport(True, None)
    return complement_property(frame, allow_large=allow_large)


def scalability(frame: Frame) -> ScalabilityCertificate | None:
    """Exact LP feasibility of ``sum c_i φ_iφ_iᵀ = I`` with ``c >= 0``.

    Float frames are converted to the exact binary values of their entries.
    """
    if not is_frame(frame):
        raise ValueError("scalability is only defined for frames (spanning families)")
    vecs = linalg.as_array(frame.vectors, EXACT)
    d = frame.dim
    pairs = [(j, k) for j in range(d) for k in range(j, d)]
    a = [[v[j] * v[k] for v in vecs] for j, k in pairs]
    b = [Fraction(int(j == k)) for j, k in pairs]
    c = feasible_point(a, b)
    if c is None:
        return None
    return ScalabilityCertificate(tuple(c), Fraction(1))


def certificate_residual(frame: Frame, cert: ScalabilityCertificate) -> np.ndarray:
    """``sum c_i φ_iφ_iᵀ - bound·I``, computed exactly."""
    vecs = linalg.as_array(frame.vectors, EXACT)
    d = frame.dim
    total = linalg.zeros((d, d), EXACT)
    for c, v in zip(cert.weights, vecs):
        total = total + c * np.outer(v, v)
    return total - cert.bound * linalg.identity(d, EXACT)


def rescale(frame: Frame, scales: Sequence) -> Frame:
    if len(scales) != len(frame):
        raise ValueError(f"expected {len(frame)} scales, got {len(scales)}")
    s = linalg.as_array(list(scales), frame.backend)
    if any(linalg.is_zero(c, frame.eps) for c in s):
        raise ValueError("scales must be nonzero")
    return Frame(frame.vectors * s.reshape(-1, 1), frame.backend, frame.eps)


def permute(frame: Frame, order: Sequence[int]) -> Frame:
    return Frame(frame.vectors[list(order)], frame.backend, frame.eps)
