"""Constructors for the worked example families.

Each constructor returns an :class:`ExampleBundle`: the object plus a list of
named checks with the verdict each must produce. ``bundle.verify()`` runs
them all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt
from typing import Any, Callable, Sequence

from . import linalg
from .frames import Frame, complement_property, does_phase_retrieval, full_spark
from .linalg import EXACT, FLOAT
from .poly import count_real_roots, f0_checksum, f0_dataset, is_homogeneous, specialize, specialize_x44
from .search import edidin_numeric_falsify, z_random_probe
from .subspaces import Arrangement, Subspace, arrangement_from_perps, edidin_verify_witness


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[Any], Any]
    expected: Any


@dataclass(frozen=True, eq=False)
class ExampleBundle:
    name: str
    obj: Frame | Arrangement
    checks: tuple[Check, ...]
    backend: str
    params: dict = field(default_factory=dict)

    def verify(self) -> dict[str, tuple[Any, bool]]:
        """Run every check: name -> (observed value, matches expected)."""
        out = {}
        for chk in self.checks:
            got = chk.run(self.obj)
            out[chk.name] = (got, got == chk.expected)
        return out


def _ones(d: int) -> list[int]:
    return [1] * d


def gen_r3_quintet() -> ExampleBundle:
    """Five vectors in R^3 that do phase retrieval while their perps do not.

    One entry is 1 - √2, so this family lives on the float backend.
    """
    vecs = [
        [0.0, 0.0, 1.0],
        [1.0, 0.0, 1.0],
        [0.0, 1.0, 1.0],
        [1.0, 1.0 - sqrt(2.0), 2.0],
        [1.0, 1.0, 1.0],
    ]
    frame = Frame(vecs, FLOAT)
    checks = (
        Check("full_spark", lambda f: full_spark(f).full_spark, True),
        Check("does_phase_retrieval", lambda f: does_phase_retrieval(f).holds, True),
        Check(
            "perps_rank_at_ones",
            lambda f: edidin_verify_witness(arrangement_from_perps(f), _ones(3)).rank,
            2,
        ),
    )
    return ExampleBundle("r3-quintet", frame, checks, FLOAT)


def set_a_last(head: Sequence) -> Fraction:
    """Last coordinate forced by membership in the set A: Σa_i² / Σa_i."""
    head = [Fraction(v) for v in head]
    s = sum(head)
    if s == 0:
        raise ValueError("the first d-1 coordinates must not sum to zero")
    return sum(v * v for v in head) / s


def in_set_a(vec: Sequence) -> bool:
    """a_d · Σ_{i<d} a_i = Σ_{i<d} a_i² with Σ_{i<d} a_i ≠ 0."""
    head = [Fraction(v) for v in vec[:-1]]
    s = sum(head)
    return s != 0 and Fraction(vec[-1]) * s == sum(v * v for v in head)


def set_b_vector(x, d: int) -> list[Fraction]:
    """The curve (x, x², ..., x^{d-2}, 1 − Σx^i, Σx^{2i} + (1 − Σx^i)²)."""
    x = Fraction(x)
    powers = [x**i for i in range(1, d - 1)]
    mid = 1 - sum(powers)
    return powers + [mid, sum(p * p for p in powers) + mid * mid]


def base_vectors(d: int) -> list[list[Fraction]]:
    """e_i + e_d for i < d, then the all-ones vector."""
    out = []
    for i in range(d - 1):
        v = [Fraction(0)] * d
        v[i] = Fraction(1)
        v[-1] = Fraction(1)
        out.append(v)
    out.append([Fraction(1)] * d)
    return out


def gen_rd_family(d: int, xs: Sequence | None = None, retry: bool = True, max_tries: int = 1000) -> ExampleBundle:
    """2d-1 rational vectors in R^d that do phase retrieval; their perps fail.

    The d base vectors are followed by d-1 points of the curve B at the given
    xs (default 2, 3, ..., d). If the family is not full spark, the largest
    offending x is replaced by the next unused integer, or, with
    ``retry=False``, a ValueError names the dependent subset. The final xs
    are recorded in ``bundle.params``.
    """
    if d < 3:
        raise ValueError("the family is defined for d >= 3")
    explicit = xs is not None
    xs = [Fraction(v) for v in (xs if explicit else range(2, d + 1))]
    if len(xs) != d - 1:
        raise ValueError(f"need d-1 = {d - 1} values of x, got {len(xs)}")
    if len(set(xs)) != len(xs):
        raise ValueError("xs must be distinct")
    base = base_vectors(d)
    next_x = max(max(xs), Fraction(d)) + 1
    replaced = []
    for _ in range(max_tries + 1):
        vecs = base + [set_b_vector(x, d) for x in xs]
        frame = Frame(vecs, EXACT)
        spark = full_spark(frame)
        if spark.full_spark:
            break
        bad = [i - d for i in spark.dependent if i >= d]
        if not bad or not retry:
            raise ValueError(f"family is not full spark: dependent subset {spark.dependent}")
        k = max(bad)
        replaced.append((xs[k], next_x))
        xs[k] = next_x
        next_x += 1
    else:
        raise ValueError(f"no full spark family found after {max_tries} replacements")

    def perps_last_coords(f: Frame) -> bool:
        arr = arrangement_from_perps(f)
        ones = linalg.as_array(_ones(d), EXACT)
        return all((p @ ones)[-1] == 0 for p in arr.projectors)

    checks = (
        Check("vector_count", len, 2 * d - 1),
        Check("in_set_a", lambda f: all(in_set_a(v) for v in f), True),
        Check("full_spark", lambda f: full_spark(f).full_spark, True),
        Check("does_phase_retrieval", lambda f: does_phase_retrieval(f).holds, True),
        Check("perps_last_coordinate_zero", perps_last_coords, True),
        Check(
            "perps_deficient_at_ones",
            lambda f: edidin_verify_witness(arrangement_from_perps(f), _ones(d)).deficient,
            True,
        ),
    )
    params = {"d": d, "xs": [str(x) for x in xs], "replaced": [(str(a), str(b)) for a, b in replaced]}
    return ExampleBundle(f"rd-family-{d}", frame, checks, EXACT, params)


R3_HYPERPLANE_BASES = (
    ((0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 0, 1)),
    ((1, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 1, 1)),
    ((0, 1, 0), (1, 0, 1)),
)

R3_HYPERPLANE_PERPS = ((1, 0, 0), (0, 1, 0), (1, -1, 0), (0, 1, -1), (1, 0, -1))


def gen_r3_hyperplane_quintet(restarts: int = 200, seed: int = 7) -> ExampleBundle:
    """Five planes in R^3 that do phase retrieval while their perps do not."""
    arr = Arrangement(tuple(Subspace(basis=b, backend=EXACT) for b in R3_HYPERPLANE_BASES))
    checks = (
        Check(
            "perps_complement_property",
            lambda a: complement_property(Frame(R3_HYPERPLANE_PERPS, EXACT)).witness,
            (0, 1, 2),
        ),
        Check(
            "falsifier_witness",
            lambda a: edidin_numeric_falsify(a, restarts=restarts, seed=seed).witness,
            None,
        ),
    )
    return ExampleBundle("r3-hyperplanes", arr, checks, EXACT, {"restarts": restarts, "seed": seed})


R4_SIX_NORMALS = (
    (2, -1, 2, 2),
    (2, 5, 4, 1),
    (0, 4, -1, -1),
    (5, 4, -2, -4),
    (4, 1, 5, 3),
    (3, -4, -4, -3),
)


def gen_r4_six_hyperplanes(restarts: int = 500, seed: int = 7, trials: int = 1000) -> ExampleBundle:
    """Six hyperplanes of R^4 with integer normals.

    Normalizing the normals is dropped because projectors are scale
    invariant. The phase retrieval claim is supported here by numerical
    search and by the Sturm count on the elimination polynomial f0; the
    remaining algebraic step is not reproduced.
    """
    arr = Arrangement.hyperplanes(R4_SIX_NORMALS, EXACT)
    checks = (
        Check("subspace_dims", lambda a: [s.k for s in a], [3] * 6),
        Check(
            "falsifier_witness",
            lambda a: edidin_numeric_falsify(a, restarts=restarts, seed=seed).witness,
            None,
        ),
        Check("f0_homogeneous", lambda a: is_homogeneous(f0_dataset(), 10), True),
        Check("f0_real_roots", lambda a: count_real_roots(specialize(f0_dataset())), 0),
        Check("z_probe_members", lambda a: z_random_probe(a, trials=trials, seed=seed).exact_members, 0),
    )
    return ExampleBundle(
        "r4-six", arr, checks, EXACT, {"restarts": restarts, "seed": seed, "trials": trials}
    )


def is_r4_six(arr: Arrangement) -> bool:
    """Same projectors as the six-hyperplane arrangement, in the same order."""
    if arr.dim != 4 or len(arr) != 6 or not arr.all_hyperplanes:
        return False
    ref = Arrangement.hyperplanes(R4_SIX_NORMALS, EXACT)
    if arr.backend != EXACT:
        ref = ref.as_backend(arr.backend)
    return all(linalg.equal(p, q, arr.eps) for p, q in zip(arr.projectors, ref.projectors))


def r4_six_sturm_reference() -> dict:
    """Summary of the exact Sturm certificate that accompanies numeric evidence on r4-six."""
    f0 = f0_dataset()
    return {
        "check": "sturm",
        "certainty": "PROOF",
        "polynomial": "f0",
        "checksum": f0_checksum(f0),
        "homogeneous_degree": 10 if is_homogeneous(f0, 10) else None,
        "real_roots_x34_1": count_real_roots(specialize(f0)),
        "real_roots_x44_1": count_real_roots(specialize_x44(f0)),
    }
