"""Dense polynomials in the upper summation limit, with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .rationals import as_fraction


class Polynomial:
    """Immutable polynomial with Fraction coefficients, ascending by degree.

    Trailing zero coefficients are stripped, so equal polynomials compare
    equal coefficientwise; the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [as_fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls) -> Polynomial:
        return cls(())

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Polynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def shifted_power(cls, shift, m: int) -> Polynomial:
        """(n + shift)^m expanded by the binomial theorem."""
        shift = as_fraction(shift)
        return cls([comb(m, d) * shift ** (m - d) for d in range(m + 1)])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def evaluate(self, n) -> Fraction:
        n = as_fraction(n)
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * n + c
        return result

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return Polynomial(merged)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, scalar) -> Polynomial:
        if isinstance(scalar, Polynomial):
            return NotImplemented
        scalar = as_fraction(scalar)
        return Polynomial([c * scalar for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"
