"""Homogeneous polynomials in x, y, z over an exact field.

Monomials are exponent triples; the fixed order is graded lexicographic with
x > y > z, so within one degree ``monomials(n)`` starts at x^n and ends at z^n.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .exactfield import FieldDescriptor, FieldScalar

__all__ = ["monomials", "monomial_index", "HomogeneousPoly"]


@lru_cache(maxsize=None)
def monomials(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple((i, j, n - i - j) for i in range(n, -1, -1) for j in range(n - i, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(n: int) -> dict[tuple[int, int, int], int]:
    return {m: k for k, m in enumerate(monomials(n))}


class HomogeneousPoly:
    """A homogeneous form; ``terms`` maps exponent triples to nonzero scalars."""

    __slots__ = ("field", "degree", "terms")

    def __init__(self, field: FieldDescriptor, degree: int, terms: Mapping[tuple[int, int, int], FieldScalar]):
        clean = {}
        for e, c in terms.items():
            if sum(e) != degree:
                raise ValueError(f"monomial {e} does not have degree {degree}")
            if not c.is_zero():
                clean[e] = c
        self.field = field
        self.degree = degree
        self.terms = clean

    @classmethod
    def linear(cls, coefficients) -> "HomogeneousPoly":
        a, b, c = coefficients
        return cls(a.field, 1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return self.field == other.field and self.degree == other.degree and self.terms == other.terms

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return HomogeneousPoly(self.field, self.degree, out)

    def scale(self, c: FieldScalar) -> "HomogeneousPoly":
        return HomogeneousPoly(self.field, self.degree, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        out: dict = {}
        for (a, b, c), u in self.terms.items():
            for (p, q, r), v in other.terms.items():
                e = (a + p, b + q, c + r)
                w = u * v
                out[e] = out[e] + w if e in out else w
        return HomogeneousPoly(self.field, self.degree + other.degree, out)

    def derivative(self, var: int) -> "HomogeneousPoly":
        out = {}
        for e, c in self.terms.items():
            if e[var]:
                ne = list(e)
                ne[var] -= 1
                out[tuple(ne)] = c * e[var]
        return HomogeneousPoly(self.field, max(self.degree - 1, 0), out)

    def leading(self) -> tuple[tuple[int, int, int], FieldScalar]:
        for m in monomials(self.degree):
            if m in self.terms:
                return m, self.terms[m]
        raise ValueError("zero polynomial has no leading term")

    def monic(self) -> "HomogeneousPoly":
        _, c = self.leading()
        return self if c.is_one() else self.scale(c.inverse())

    def evaluate(self, point) -> FieldScalar:
        acc = self.field.zero()
        for (a, b, c), v in self.terms.items():
            acc = acc + v * point[0] ** a * point[1] ** b * point[2] ** c
        return acc

    def coefficient_vector(self) -> list[FieldScalar]:
        zero = self.field.zero()
        return [self.terms.get(m, zero) for m in monomials(self.degree)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in monomials(self.degree):
            if m in self.terms:
                mono = "*".join(
                    v if k == 1 else f"{v}^{k}" for v, k in zip("xyz", m) if k
                )
                c = self.terms[m]
                parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    __repr__ = __str__
