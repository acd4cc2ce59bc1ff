"""Sparse multivariate polynomials with exact rational coefficients.

These are the scalars used wherever an identity has to hold symbol for
symbol: formal deformation variables in vacuum expectation values,
truncated kernel identities, transpose sign checks.  Only ring
operations plus division by exact numbers are provided, which is all
the Schur and fermion code needs.

A variable is any hashable tag; by convention the package uses pairs
like ``("t1", 3)`` for the third variable of the first deformation
family.  A monomial is a sorted tuple of ``(tag, exponent)`` pairs.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Poly", "variable", "constant"]

_EXACT = (int, Fraction)


def _sorted_monomial(pairs) -> tuple:
    return tuple(sorted((v, e) for v, e in pairs if e))


class Poly:
    """Immutable sparse polynomial ``{monomial: coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    clean[mono] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------
    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def constant(c) -> "Poly":
        return Poly({(): Fraction(c)}) if c else Poly()

    @staticmethod
    def variable(tag) -> "Poly":
        return Poly({((tag, 1),): Fraction(1)})

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, _EXACT) or isinstance(x, Rational):
            return Poly.constant(Fraction(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to Poly")

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = Poly.coerce(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, _EXACT) or isinstance(other, Rational):
            if not other:
                return Poly()
            return Poly({m: c * other for m, c in self.terms.items()})
        other = Poly.coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge(m1, m2)
                out[mono] = out.get(mono, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _EXACT) or isinstance(other, Rational):
            inv = Fraction(1, 1) / Fraction(other)
            return self * inv
        raise TypeError("Poly division only by exact numbers")

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Poly")
        out = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / rendering ----------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, _EXACT) or isinstance(other, Rational):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset((m, Fraction(c)) for m, c in self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono, coeff in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            factors = "*".join(
                f"{tag}^{e}" if e != 1 else str(tag) for tag, e in mono
            )
            bits.append(f"{coeff}" + (f"*{factors}" if factors else ""))
        return " + ".join(bits)


def _merge(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for tag, e in m2:
        acc[tag] = acc.get(tag, 0) + e
    return _sorted_monomial(acc.items())


def variable(tag) -> Poly:
    """Polynomial consisting of the single variable ``tag``."""
    return Poly.variable(tag)


def constant(c) -> Poly:
    """Constant polynomial."""
    return Poly.constant(c)
