"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as a dict from exponent tuples to nonzero Fractions.
Serialization orders exponent vectors lexicographically so equal
polynomials always produce identical JSON.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InterpolationError
from .linalg import QMatrix, QVector, rational_from_str, rational_to_str, solve_linear
from .errors import SingularSystemError


class MPoly:
    """Polynomial in `nvars` variables, exponent-vector -> coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean = {}
        for expo, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            expo = tuple(int(e) for e in expo)
            if len(expo) != nvars or any(e < 0 for e in expo):
                raise ValueError("bad exponent vector %r" % (expo,))
            clean[expo] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @staticmethod
    def zero(nvars: int) -> "MPoly":
        return MPoly(nvars)

    @staticmethod
    def constant(nvars: int, c) -> "MPoly":
        return MPoly(nvars, {(0,) * nvars: Fraction(c)})

    @staticmethod
    def variable(nvars: int, i: int) -> "MPoly":
        expo = tuple(1 if j == i else 0 for j in range(nvars))
        return MPoly(nvars, {expo: Fraction(1)})

    @staticmethod
    def monomial(nvars: int, expo: Sequence[int], c=1) -> "MPoly":
        return MPoly(nvars, {tuple(expo): Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, expo: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(expo), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other: "MPoly") -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.nvars, other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MPoly(self.nvars, terms)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            s = Fraction(other)
            return MPoly(self.nvars, {e: c * s for e, c in self.terms.items()})
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "MPoly":
        s = Fraction(scalar)
        return MPoly(self.nvars, {e: c / s for e, c in self.terms.items()})

    def eval(self, point: Sequence) -> Fraction:
        pt = [Fraction(x) for x in point]
        if len(pt) != self.nvars:
            raise ValueError("point dimension mismatch")
        total = Fraction(0)
        for expo, c in self.terms.items():
            v = c
            for x, e in zip(pt, expo):
                if e:
                    v *= x ** e
            total += v
        return total

    def homogeneous_part(self, d: int) -> "MPoly":
        return MPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_homogeneous(self, d: int) -> bool:
        return all(sum(e) == d for e in self.terms)

    def variables_used(self) -> frozenset:
        return frozenset(i for e in self.terms for i, x in enumerate(e) if x)

    def to_json(self) -> dict:
        return {",".join(map(str, e)): rational_to_str(c)
                for e, c in sorted(self.terms.items())}

    @staticmethod
    def from_json(nvars: int, obj: dict) -> "MPoly":
        terms = {}
        for key, val in obj.items():
            expo = tuple(int(x) for x in key.split(",")) if key else ()
            terms[expo] = rational_from_str(val)
        return MPoly(nvars, terms)

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join("m%d^%d" % (i + 1, x) for i, x in enumerate(e) if x)
            bits.append("%s%s" % (c, "*" + mono if mono else ""))
        return "MPoly(%s)" % " + ".join(bits)


def _monomial_value(point, expo) -> Fraction:
    v = Fraction(1)
    for x, e in zip(point, expo):
        if e:
            v *= Fraction(x) ** e
    return v


def mpoly_interpolate(support: Iterable[Sequence[int]],
                      samples: Sequence[tuple[Sequence, object]]) -> MPoly:
    """Unique polynomial on `support` matching all (point, value) samples.

    The first len(support) samples must give a nonsingular evaluation
    matrix; any extra samples are checked for consistency.
    """
    support = [tuple(int(x) for x in e) for e in support]
    if not support:
        raise ValueError("empty support")
    nvars = len(support[0])
    if len(samples) < len(support):
        raise InterpolationError("need at least %d samples" % len(support))
    rows = [[_monomial_value(pt, e) for e in support] for pt, _ in samples[: len(support)]]
    rhs = QVector([Fraction(v) for _, v in samples[: len(support)]])
    try:
        coeffs = solve_linear(QMatrix(rows), rhs)
    except SingularSystemError:
        raise InterpolationError("insufficient sample geometry") from None
    poly = MPoly(nvars, dict(zip(support, coeffs)))
    for pt, val in samples[len(support):]:
        if poly.eval(pt) != Fraction(val):
            raise InterpolationError("inconsistent samples beyond the support")
    return poly
