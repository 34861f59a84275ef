"""Brute-force phaseless reconstruction, used as an oracle for the CP checker.

Given magnitudes b_i = |<x, φ_i>|, every sign pattern is tried and the
linear system <y, φ_i> = ε_i b_i is solved exactly. A frame does phase
retrieval when only ±x survives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .frames import Frame, GuardExceeded, is_frame
from .linalg import EXACT

#: Sign enumeration refuses more measurements than this.
RECONSTRUCT_GUARD = 24


@dataclass(frozen=True, eq=False)
class MeasurementSet:
    frame: Frame
    magnitudes: tuple

    def __post_init__(self):
        if len(self.magnitudes) != len(self.frame):
            raise ValueError("one magnitude per frame vector")
        if any(b < 0 for b in self.magnitudes):
            raise ValueError("magnitudes must be nonnegative")


def measure(frame: Frame, x) -> MeasurementSet:
    xv = linalg.as_array(x, frame.backend)
    if xv.shape != (frame.dim,):
        raise ValueError(f"signal must have length {frame.dim}")
    return MeasurementSet(frame, tuple(abs(v) for v in frame.vectors @ xv))


def canonical_sign(v: np.ndarray) -> np.ndarray:
    """Representative of ±v whose first nonzero entry is positive."""
    for t in v:
        if t != 0:
            return -v if t < 0 else v
    return v


def _key(v: np.ndarray) -> tuple:
    c = canonical_sign(v)
    if c.dtype != object:
        c = np.round(c, 9) + 0.0
    return tuple(c.tolist())


def reconstruct_brute(frame: Frame, meas: MeasurementSet) -> list[np.ndarray]:
    """All signals consistent with the magnitudes, one representative per ±class.

    The sign at the first nonzero magnitude is fixed to +1 and zero
    magnitudes carry no sign, so each class is produced once. For a frame
    that does not span, each consistent pattern contributes one particular
    solution (free variables set to zero).
    """
    n = len(frame)
    if n > RECONSTRUCT_GUARD:
        raise GuardExceeded(f"sign enumeration over n={n} > {RECONSTRUCT_GUARD} measurements")
    b = linalg.as_array(list(meas.magnitudes), frame.backend)
    free = [i for i in range(n) if b[i] != 0][1:]
    out: dict[tuple, np.ndarray] = {}
    for signs in itertools.product((1, -1), repeat=len(free)):
        rhs = b.copy()
        for i, s in zip(free, signs):
            rhs[i] = s * b[i]
        y = linalg.solve(frame.vectors, rhs, frame.eps)
        if y is None:
            continue
        if frame.backend != EXACT and not np.allclose(frame.vectors @ y, rhs, atol=frame.eps):
            continue
        key = _key(y)
        out.setdefault(key, canonical_sign(y))
    return list(out.values())


def pr_empirical(frame: Frame, trials: int = 50, seed: int = 0, extra_signals: Sequence = ()) -> bool:
    """Operational phase retrieval test on random integer signals in [-20, 20]^d.

    False as soon as any signal is ambiguous (a certain verdict); True if
    every trial reconstructs uniquely (probabilistic). A non-spanning family
    is ambiguous outright: adding a nullspace vector leaves the magnitudes
    unchanged. ``extra_signals`` are tested before the random ones.
    """
    if not is_frame(frame):
        return False
    rng = np.random.default_rng(seed)
    signals = list(extra_signals)
    for _ in range(trials):
        signals.append([int(v) for v in rng.integers(-20, 21, size=frame.dim)])
    for x in signals:
        if len(reconstruct_brute(frame, measure(frame, x))) > 1:
            return False
    return True


def ambiguous_signal(frame: Frame, witness: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Two signals x ≠ ±y with equal magnitudes, built from a failing CP subset.

    With u ⊥ {φ_i : i ∈ I} and v ⊥ {φ_i : i ∉ I}, both nonzero because
    neither side spans, x = u + v and y = u − v agree in every |<·, φ_i>|.
    """
    idx = set(witness)
    side = [i for i in range(len(frame)) if i in idx]
    other = [i for i in range(len(frame)) if i not in idx]
    d = frame.dim

    def orth(rows):
        if not rows:
            return linalg.identity(d, frame.backend)[:, 0]
        null = linalg.nullspace(frame.vectors[rows], frame.eps)
        if null.shape[1] == 0:
            raise ValueError("subset spans R^d; not a complement-property witness")
        return null[:, 0]

    u, v = orth(side), orth(other)
    return u + v, u - v
