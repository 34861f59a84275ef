"""Backend-generic dense linear algebra over exact rationals or float64.

Matrices are numpy arrays. The exact backend uses ``dtype=object`` arrays of
:class:`fractions.Fraction`; the float backend uses ``float64``. Every routine
infers the backend from the dtype, so callers never pass a backend flag to the
algebra itself.

Exact rank and determinant go through fraction-free (Bareiss) elimination on
integer rows; nullspaces and solves go through an exact reduced row echelon
form. Pivots are taken as the first nonzero entry in column order, which makes
every exact output deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational

import numpy as np

EXACT = "exact"
FLOAT = "float"
BACKENDS = (EXACT, FLOAT)

#: Default absolute tolerance for pivot and equality tests on the float backend.
DEFAULT_EPS = 1e-9


def to_fraction(value) -> Fraction:
    """Convert ``value`` to a Fraction.

    Accepts ints, Fractions, strings such as ``"-3/4"`` or ``"5"``, and floats
    (converted to their exact binary value).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, np.bool_)):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, (float, np.floating)):
        if not np.isfinite(value):
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(float(value))
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def _is_rational_like(value) -> bool:
    if isinstance(value, (bool, np.bool_)):
        return False
    if isinstance(value, (int, np.integer, Rational)):
        return True
    if isinstance(value, str):
        try:
            Fraction(value.strip())
        except ValueError:
            return False
        return True
    return False


def infer_backend(data) -> str:
    """Exact if every entry is rational-like, float otherwise."""
    if isinstance(data, np.ndarray):
        if data.dtype == object:
            flat = data.ravel()
            return EXACT if all(_is_rational_like(v) for v in flat) else FLOAT
        return EXACT if np.issubdtype(data.dtype, np.integer) else FLOAT
    flat = np.asarray(data, dtype=object).ravel()
    return EXACT if all(_is_rational_like(v) for v in flat) else FLOAT


def backend_of(a: np.ndarray) -> str:
    return EXACT if a.dtype == object else FLOAT


def as_array(data, backend: str | None = None) -> np.ndarray:
    """Build a vector or matrix in the requested backend (inferred if None)."""
    if backend is None:
        backend = infer_backend(data)
    if backend == EXACT:
        raw = np.asarray(data, dtype=object)
        out = np.empty(raw.shape, dtype=object)
        for idx, v in np.ndenumerate(raw):
            out[idx] = to_fraction(v)
        return out
    if backend == FLOAT:
        raw = np.asarray(data, dtype=object)
        out = np.empty(raw.shape, dtype=np.float64)
        for idx, v in np.ndenumerate(raw):
            out[idx] = float(Fraction(v.strip())) if isinstance(v, str) else float(v)
        return out
    raise ValueError(f"unknown backend {backend!r}")


def identity(d: int, backend: str = EXACT) -> np.ndarray:
    if backend == EXACT:
        out = np.empty((d, d), dtype=object)
        for i in range(d):
            for j in range(d):
                out[i, j] = Fraction(int(i == j))
        return out
    return np.eye(d)


def zeros(shape, backend: str = EXACT) -> np.ndarray:
    if backend == EXACT:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out
    return np.zeros(shape)


def is_zero(value, eps: float = DEFAULT_EPS) -> bool:
    if isinstance(value, Fraction) or isinstance(value, int):
        return value == 0
    return abs(value) <= eps


def all_zero(a: np.ndarray, eps: float = DEFAULT_EPS) -> bool:
    if backend_of(a) == EXACT:
        return all(v == 0 for v in a.ravel())
    return bool(np.all(np.abs(a) <= eps))


def equal(a: np.ndarray, b: np.ndarray, eps: float = DEFAULT_EPS) -> bool:
    """Literal equality on the exact backend, entrywise within eps otherwise."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        return False
    if a.dtype == object and b.dtype == object:
        return all(x == y for x, y in zip(a.ravel(), b.ravel()))
    return bool(np.all(np.abs(a.astype(float) - b.astype(float)) <= eps))


def integer_rows(a: np.ndarray) -> list[list[int]]:
    """Scale each row of an exact matrix by the lcm of its denominators.

    Row scaling by a positive integer preserves rank, row spans and the
    sign pattern of the row, and scales the determinant by a known factor.
    """
    rows = []
    for row in a:
        m = lcm(*(to_fraction(v).denominator for v in row)) if len(row) else 1
        rows.append([int(to_fraction(v) * m) for v in row])
    return rows


def _bareiss(rows: list[list[int]]) -> tuple[int, int, int]:
    """Fraction-free elimination in place.

    Returns (rank, swap sign, last pivot). For a nonsingular square input the
    last pivot times the sign is the determinant.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    prev = 1
    r = 0
    sign = 1
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        piv = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, m):
            row = rows[i]
            lead = row[c]
            for j in range(c + 1, n):
                row[j] = (row[j] * piv - lead * prow[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r, sign, prev


def rank_int(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix given as a list of rows."""
    if not rows or not rows[0]:
        return 0
    return _bareiss([list(r) for r in rows])[0]


def det_int(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    r, sign, last = _bareiss([list(r) for r in rows])
    return sign * last if r == n else 0


def _float_echelon(a: np.ndarray, eps: float) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with partial pivoting; pivots below eps are zero."""
    r_mat = np.array(a, dtype=float, copy=True)
    m, n = r_mat.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = r + int(np.argmax(np.abs(r_mat[r:, c])))
        if abs(r_mat[p, c]) <= eps:
            r_mat[r:, c] = 0.0
            continue
        if p != r:
            r_mat[[r, p]] = r_mat[[p, r]]
        r_mat[r] /= r_mat[r, c]
        for i in range(m):
            if i != r and r_mat[i, c] != 0.0:
                r_mat[i] -= r_mat[i, c] * r_mat[r]
        pivots.append(c)
        r += 1
    return r_mat, pivots


def _exact_rref(a: np.ndarray) -> tuple[list[list[Fraction]], list[int]]:
    rows = [[to_fraction(v) for v in row] for row in a]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(a, eps: float = DEFAULT_EPS) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    if backend_of(a) == EXACT:
        rows, piv = _exact_rref(a)
        return as_array(rows, EXACT).reshape(a.shape), piv
    return _float_echelon(a, eps)


def rank(a, eps: float = DEFAULT_EPS) -> int:
    """Rank over the scalar field of the matrix's backend.

    >>> rank(as_array([[1, 2], [2, 4]]))
    1
    """
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("rank expects a 2-d matrix")
    if a.size == 0:
        return 0
    if backend_of(a) == EXACT:
        return rank_int(integer_rows(a))
    return len(_float_echelon(a, eps)[1])


def det(a):
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"determinant requires a square matrix, got shape {a.shape}")
    if backend_of(a) == FLOAT:
        return float(np.linalg.det(a)) if a.size else 1.0
    if a.size == 0:
        return Fraction(1)
    scale = 1
    rows = []
    for row in a:
        m = lcm(*(v.denominator for v in row))
        scale *= m
        rows.append([int(v * m) for v in row])
    return Fraction(det_int(rows), scale)


def nullspace(a, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Canonical free-variable basis of the right nullspace, as columns.

    The result has shape ``(cols, cols - rank)``; zero columns when the
    matrix has full column rank.
    """
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("nullspace expects a 2-d matrix")
    n = a.shape[1]
    backend = backend_of(a)
    if a.shape[0] == 0:
        return identity(n, backend)
    r_mat, pivots = rref(a, eps)
    free = [c for c in range(n) if c not in pivots]
    basis = zeros((n, len(free)), backend)
    one = Fraction(1) if backend == EXACT else 1.0
    for k, f in enumerate(free):
        basis[f, k] = one
        for row, pc in enumerate(pivots):
            basis[pc, k] = -r_mat[row, f]
    return basis


def solve(a, b, eps: float = DEFAULT_EPS) -> np.ndarray | None:
    """One solution of ``a @ x = b`` (free variables set to zero), or None."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 1 or a.shape[0] != b.shape[0]:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    backend = EXACT if backend_of(a) == EXACT and backend_of(b) == EXACT else FLOAT
    if backend == FLOAT:
        a = a.astype(float)
        b = b.astype(float)
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    r_mat, pivots = rref(aug, eps)
    n = a.shape[1]
    if n in pivots:
        return None
    x = zeros(n, backend)
    for row, pc in enumerate(pivots):
        x[pc] = r_mat[row, n]
    return x


def projector_span(basis, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Orthogonal projector onto the column span: B (BᵀB)⁻¹ Bᵀ.

    No orthonormalization happens, so rational columns give a rational
    projector.
    """
    b_mat = np.asarray(basis)
    if b_mat.ndim == 1:
        b_mat = b_mat.reshape(-1, 1)
    k = b_mat.shape[1]
    r = rank(b_mat, eps)
    if r != k:
        raise ValueError(f"basis columns are dependent: rank {r} < {k} columns")
    gram = b_mat.T @ b_mat
    if backend_of(b_mat) == FLOAT:
        return b_mat @ np.linalg.solve(gram, b_mat.T)
    # columns of X solve gram @ X = Bᵀ
    x = np.empty((k, b_mat.shape[0]), dtype=object)
    for j in range(b_mat.shape[0]):
        x[:, j] = solve(gram, b_mat[j, :])
    return b_mat @ x


def projector_hyperplane(normal, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Projector onto the hyperplane orthogonal to ``normal``: I − φφᵀ/‖φ‖²."""
    phi = np.asarray(normal)
    if phi.ndim != 1:
        raise ValueError("normal must be a vector")
    nrm = phi @ phi
    if is_zero(nrm, eps * eps):
        raise ValueError("zero normal vector does not define a hyperplane")
    d = phi.shape[0]
    return identity(d, backend_of(phi)) - np.outer(phi, phi) / nrm


def projector_line(direction, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Projector onto span{φ}: φφᵀ/‖φ‖²."""
    phi = np.asarray(direction)
    nrm = phi @ phi
    if is_zero(nrm, eps * eps):
        raise ValueError("zero vector does not span a line")
    return np.outer(phi, phi) / nrm


def trace(a):
    return sum(np.diagonal(a), Fraction(0) if backend_of(a) == EXACT else 0.0)


def is_symmetric(a, eps: float = DEFAULT_EPS) -> bool:
    a = np.asarray(a)
    return a.ndim == 2 and a.shape[0] == a.shape[1] and equal(a, a.T, eps)


def primitive_integer_vector(v) -> list[int]:
    """Smallest integer multiple of a rational vector with gcd 1 (sign kept)."""
    from math import gcd

    ints = integer_rows(as_array([list(v)], EXACT))[0]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints
