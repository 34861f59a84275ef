"""Exact integer polynomials and Sturm real-root counting.

Everything here stays in Python integers. Sturm chains are built from
pseudo-remainders scaled by the smallest positive multiplier that keeps the
division exact, then divided by their positive content; the sign pattern a
Sturm chain needs survives both steps.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import gcd
from typing import Iterable

# The eleven printed coefficients of the degree-10 elimination polynomial,
# keyed by (exponent of x34, exponent of x44).
_F0_TERMS = (
    (0, 10, "615836814694440125755941750205355957259806055430532973956877900"),
    (1, 9, "-884972594452387958848562473144241797030697764519228205098183524"),
    (2, 8, "37549510562762689603032479610577980614684970115180508761212602923"),
    (3, 7, "-261784289245252068342511157673868998003077035922935758454568869970"),
    (4, 6, "1318646361014374203805595493716801537462083922918839965435901151518"),
    (5, 5, "2323672503729013471271218611541822606087314313103855222266887257194"),
    (6, 4, "841099655929202539990506870648349938942927420225588274968467286492"),
    (7, 3, "2453118466138743624272476494499733256382267234695398509857315458204"),
    (8, 2, "2686702635361560203562012680667911834582476444588124478311966009776"),
    (9, 1, "59872475066978406270800582425071592403273130463063552339405262912"),
    (10, 0, "950484050032900617743793729374383632917614227356173754905368787200"),
)


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial over Z, constant term first, trailing zeros trimmed."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, t):
        return poly_eval(self, t)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPoly":
        """Multiply by t**k."""
        return IntPoly((0,) * k + self.coeffs) if self.coeffs else self

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide by the positive content; signs are preserved."""
        g = self.content()
        return IntPoly(tuple(c // g for c in self.coeffs)) if g > 1 else self

    def reversed(self) -> "IntPoly":
        """t**deg · p(1/t)."""
        return IntPoly(tuple(reversed(self.coeffs)))


def poly_eval(p: IntPoly, t):
    """Horner evaluation; exact for int and Fraction arguments."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of m·a by b for a positive integer m chosen step by step.

    Each elimination step multiplies the running remainder by
    |lc(b)| / gcd(lc(r), lc(b)), the smallest positive factor that makes the
    leading term divisible. The result is a positive multiple of the true
    remainder over Q.
    """
    if not b:
        raise ZeroDivisionError("pseudo-remainder by the zero polynomial")
    r = a
    lb = b.leading
    db = b.degree
    while r and r.degree >= db:
        lr = r.leading
        g = gcd(lr, lb)
        mult = abs(lb) // g
        q = (lr // g) * (1 if lb > 0 else -1)
        r = r * mult - (b * q).shift(r.degree - db)
    return r


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z with positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    while b:
        a, b = b, pseudo_remainder(a, b).primitive()
    if a and a.leading < 0:
        a = -a
    return a


def exact_quotient(a: IntPoly, b: IntPoly) -> IntPoly:
    """a / b for b dividing a over Z[x]; raises if the division is not exact."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    db = b.degree
    q = [0] * max(0, a.degree - db + 1)
    for k in range(len(q) - 1, -1, -1):
        top = rem[k + db]
        if top % b.leading:
            raise ArithmeticError("polynomial division is not exact over Z")
        c = top // b.leading
        q[k] = c
        for j, bc in enumerate(b.coeffs):
            rem[k + j] -= c * bc
    if any(rem):
        raise ArithmeticError("polynomial division leaves a remainder")
    return IntPoly(tuple(q))


def squarefree_part(p: IntPoly) -> IntPoly:
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.primitive()
    return exact_quotient(p.primitive(), g)


@dataclass(frozen=True)
class SturmChain:
    polys: tuple[IntPoly, ...]

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i) -> IntPoly:
        return self.polys[i]

    def variations_at(self, t) -> int:
        return _variations(_sign(p(t)) for p in self.polys)

    def variations_at_infinity(self, positive: bool) -> int:
        signs = []
        for p in self.polys:
            s = _sign(p.leading)
            if not positive and p.degree % 2:
                s = -s
            signs.append(s)
        return _variations(signs)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _variations(signs: Iterable[int]) -> int:
    count = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def sturm_chain(p: IntPoly) -> SturmChain:
    """Sturm chain of the squarefree part of p.

    For squarefree p the first element is p divided by its positive content.
    Repeated roots are removed first (dividing by gcd(p, p')), so counts
    always refer to distinct roots.
    """
    if not p:
        raise ValueError("the zero polynomial has no Sturm chain")
    if p.degree > 0 and poly_gcd(p, p.derivative()).degree > 0:
        p = squarefree_part(p)
    chain = [p.primitive()]
    if p.degree > 0:
        chain.append(p.derivative().primitive())
        while chain[-1].degree > 0:
            r = pseudo_remainder(chain[-2], chain[-1])
            if not r:
                break
            chain.append((-r).primitive())
    return SturmChain(tuple(chain))


def count_real_roots(p: IntPoly, interval=None) -> int:
    """Number of distinct real roots on the whole line or in a closed [a, b].

    ``interval`` is None for (-inf, +inf) or a pair (a, b) of rationals with
    a < b, neither of which may be a root.
    """
    chain = sturm_chain(p)
    if interval is None:
        return chain.variations_at_infinity(False) - chain.variations_at_infinity(True)
    a, b = (Fraction(v) for v in interval)
    if not a < b:
        raise ValueError(f"interval bounds must satisfy a < b, got [{a}, {b}]")
    for bound in (a, b):
        if poly_eval(p, bound) == 0:
            raise ValueError(f"polynomial vanishes at the interval bound {bound}")
    return chain.variations_at(a) - chain.variations_at(b)


class BivariatePoly:
    """Sparse polynomial in (x34, x44): {(e34, e44): integer coefficient}."""

    def __init__(self, terms: Iterable[tuple[int, int, int]] = ()):
        data: dict[tuple[int, int], int] = {}
        for e34, e44, c in terms:
            e34, e44, c = int(e34), int(e44), int(c)
            if e34 < 0 or e44 < 0:
                raise ValueError(f"negative exponent in term ({e34}, {e44})")
            key = (e34, e44)
            if key in data:
                raise ValueError(f"duplicate exponent pair {key}")
            if c:
                data[key] = c
        self._terms = data

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariatePoly) and self._terms == other._terms

    def __repr__(self) -> str:
        return f"BivariatePoly({len(self)} terms)"

    def coefficient(self, e34: int, e44: int) -> int:
        return self._terms.get((e34, e44), 0)

    def __call__(self, x34, x44):
        return sum((c * x34**a * x44**b for (a, b), c in self._terms.items()), 0)

    def to_text(self) -> str:
        lines = [f"{a} {b} {c}" for (a, b), c in sorted(self._terms.items())]
        return "\n".join(lines) + "\n"


def specialize(f: BivariatePoly, x34: int = 1) -> IntPoly:
    """f(x34, t) as a polynomial in t = x44.

    The coefficient of t**k collects every term whose x44-exponent is k,
    each scaled by x34**e34.
    """
    coeffs: dict[int, int] = {}
    for (e34, e44), c in f.terms.items():
        coeffs[e44] = coeffs.get(e44, 0) + c * x34**e34
    return _dense(coeffs)


def specialize_x44(f: BivariatePoly, x44: int = 1) -> IntPoly:
    """f(t, x44) as a polynomial in t = x34."""
    coeffs: dict[int, int] = {}
    for (e34, e44), c in f.terms.items():
        coeffs[e34] = coeffs.get(e34, 0) + c * x44**e44
    return _dense(coeffs)


def _dense(coeffs: dict[int, int]) -> IntPoly:
    if not coeffs:
        return IntPoly()
    return IntPoly(tuple(coeffs.get(i, 0) for i in range(max(coeffs) + 1)))


def is_homogeneous(f: BivariatePoly, deg: int) -> bool:
    return all(a + b == deg for a, b in f.terms)


def parse_bivariate(text: str) -> BivariatePoly:
    """Parse "e34 e44 coefficient" lines; '#' starts a comment."""
    terms = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'e34 e44 coefficient', got {line!r}")
        try:
            terms.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {line!r}") from None
    try:
        return BivariatePoly(terms)
    except ValueError as exc:
        raise ValueError(f"{exc}") from None


def f0_dataset() -> BivariatePoly:
    """The eleven-term homogeneous degree-10 elimination polynomial."""
    return BivariatePoly((a, b, int(c)) for a, b, c in _F0_TERMS)


def f0_data_file_text() -> str:
    return resources.files("phaselab").joinpath("data/f0.txt").read_text()


def f0_checksum(f: BivariatePoly | None = None) -> str:
    """SHA-256 of the canonical text form (sorted "e34 e44 c" lines)."""
    f = f0_dataset() if f is None else f
    return hashlib.sha256(f.to_text().encode()).hexdigest()
