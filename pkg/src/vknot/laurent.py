"""Exact Laurent polynomials in one variable t.

Coefficients are Python integers (arbitrary precision) and exponents may be
negative.  Values are immutable and hashable so they can serve as dictionary
keys in tabulation experiments.  The string form lists terms in ascending
exponent with explicit sign separators, e.g. ``t^-1 - 2 + t``; the zero
polynomial prints as ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LaurentPolynomial:
    """Sparse polynomial as ((exponent, coefficient), ...), ascending, no zeros."""

    terms: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def from_dict(coefficients: dict[int, int]) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple(sorted(
            (e, c) for e, c in coefficients.items() if c != 0)))

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return LaurentPolynomial.from_dict({exponent: coefficient})

    @staticmethod
    def zero() -> "LaurentPolynomial":
        return LaurentPolynomial()

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial.from_dict(out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def scaled(self, factor: int) -> "LaurentPolynomial":
        return LaurentPolynomial.from_dict({e: factor * c for e, c in self.terms})

    def invert_variable(self) -> "LaurentPolynomial":
        """Substitute t -> t^-1."""
        return LaurentPolynomial(tuple(sorted((-e, c) for e, c in self.terms)))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)
