"""Exact scalars over Q, simple extensions Q[x]/(m(x)) and prime fields F_p.

A field is described by a :class:`FieldDescriptor`; elements are immutable
:class:`FieldScalar` values with a canonical representation, so ``==`` and
``hash`` are representational.

Extension elements are stored as a tuple of integer numerators over one
positive common denominator (gcd of everything equal to 1).  The public
:attr:`FieldScalar.coefficients` view exposes them as reduced fractions.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import isprime

__all__ = [
    "FieldError",
    "FieldDescriptor",
    "FieldScalar",
    "rationals",
    "extension",
    "prime_field",
    "parse_scalar",
]


class FieldError(ArithmeticError):
    """Raised for field mismatches, division by zero and bad specializations."""


def _normalize(nums: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-n for n in nums]
        den = -den
    g = den
    for n in nums:
        if g == 1:
            break
        g = math.gcd(g, n)
    if g != 1:
        nums = [n // g for n in nums]
        den //= g
    return tuple(nums), den


# -- polynomials over Q as lists of Fractions, lowest degree first ----------

def _ptrim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(_ptrim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
    return _ptrim(q), a


def _psub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _ptrim([x - y for x, y in zip(a, b)])


def _pmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


@dataclass(frozen=True)
class FieldDescriptor:
    """Which field a scalar lives in.

    ``kind`` is one of ``"rational"``, ``"extension"``, ``"prime"``.  For an
    extension, ``minimal_polynomial`` lists the coefficients c0, ..., ck of a
    monic m(x) of degree k >= 2 (lowest first).  Irreducibility is not checked;
    a zero divisor met during inversion raises a diagnosed :class:`FieldError`.
    """

    kind: str
    minimal_polynomial: tuple[Fraction, ...] | None = None
    characteristic: int | None = None
    _table: tuple = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind == "rational":
            if self.minimal_polynomial is not None or self.characteristic is not None:
                raise ValueError("rational field takes no parameters")
        elif self.kind == "extension":
            m = tuple(Fraction(c) for c in self.minimal_polynomial or ())
            if len(m) < 3:
                raise ValueError("minimal polynomial must have degree >= 2")
            if m[-1] != 1:
                raise ValueError("minimal polynomial must be monic")
            object.__setattr__(self, "minimal_polynomial", m)
            object.__setattr__(self, "_table", self._reduction_table(m))
        elif self.kind == "prime":
            p = self.characteristic
            if not isinstance(p, int) or p < 2 or not isprime(p):
                raise ValueError(f"characteristic {p!r} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @staticmethod
    def _reduction_table(m: tuple[Fraction, ...]):
        # x^(k+i) = sum_j T[i][j] x^j / D for i = 0..k-2
        k = len(m) - 1
        rows = []
        cur = [-c for c in m[:-1]]  # x^k
        for _ in range(k - 1):
            rows.append(cur)
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            cur = [c - top * mc for c, mc in zip(cur, m[:-1])]
        rows.append(cur)
        den = 1
        for row in rows:
            for c in row:
                den = den * c.denominator // math.gcd(den, c.denominator)
        table = tuple(tuple(int(c * den) for c in row) for row in rows[: k - 1])
        return table, den

    # -- properties -----------------------------------------------------
    @property
    def degree(self) -> int:
        """Dimension over the prime field (1 for Q and F_p)."""
        if self.kind == "extension":
            return len(self.minimal_polynomial) - 1
        return 1

    def __str__(self) -> str:
        if self.kind == "rational":
            return "Q"
        if self.kind == "prime":
            return f"GF({self.characteristic})"
        terms = []
        for i in reversed(range(len(self.minimal_polynomial))):
            c = self.minimal_polynomial[i]
            if not c:
                continue
            mono = "" if i == 0 else "a" if i == 1 else f"a^{i}"
            mag = abs(c)
            coef = str(mag) if (mag != 1 or not mono) else ""
            body = coef + ("*" if coef and mono else "") + mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        text += "".join(f" {s} {b}" for s, b in terms[1:])
        return f"Q[a]/({text})"

    def spec_tokens(self) -> list[str]:
        """Tokens for the ``field`` directive of the arrangement file format."""
        if self.kind == "rational":
            return ["rational"]
        if self.kind == "prime":
            return ["prime", str(self.characteristic)]
        return ["extension", str(self.degree)] + [str(c) for c in self.minimal_polynomial]

    # -- constructors ---------------------------------------------------
    def __call__(self, value=0) -> "FieldScalar":
        """Coerce an int, Fraction, coefficient sequence or scalar into this field."""
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldError("field mismatch")
            return value
        if self.kind == "rational":
            return FieldScalar(self, Fraction(value))
        if self.kind == "prime":
            p = self.characteristic
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise FieldError("division by zero")
                return FieldScalar(self, value.numerator * pow(value.denominator, -1, p) % p)
            return FieldScalar(self, int(value) % p)
        if isinstance(value, (int, Fraction)):
            value = [value]
        coeffs = [Fraction(c) for c in value]
        k = self.degree
        if len(coeffs) > k:
            coeffs = self._reduce_fraction_poly(coeffs)
        coeffs = coeffs + [Fraction(0)] * (k - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return FieldScalar(self, _normalize([int(c * den) for c in coeffs], den))

    def _reduce_fraction_poly(self, coeffs: list[Fraction]) -> list[Fraction]:
        _, r = _pdivmod(_ptrim(list(coeffs)), list(self.minimal_polynomial))
        return r

    def zero(self) -> "FieldScalar":
        return self(0)

    def one(self) -> "FieldScalar":
        return self(1)

    def gen(self) -> "FieldScalar":
        """The class of x in Q[x]/(m(x))."""
        if self.kind != "extension":
            raise FieldError("only extension fields have a generator")
        return self([0, 1])

    def parse(self, token: str) -> "FieldScalar":
        return parse_scalar(self, token)


def rationals() -> FieldDescriptor:
    return FieldDescriptor("rational")


def extension(minimal_polynomial: Iterable) -> FieldDescriptor:
    """Q[x]/(m(x)) with m given by its coefficients, constant term first."""
    return FieldDescriptor("extension", tuple(Fraction(c) for c in minimal_polynomial))


def prime_field(p: int) -> FieldDescriptor:
    return FieldDescriptor("prime", characteristic=p)


class FieldScalar:
    """An immutable element of the field named by ``field``."""

    __slots__ = ("field", "_v")

    def __init__(self, field: FieldDescriptor, value):
        # value must already be canonical: Fraction, residue, or (nums, den)
        self.field = field
        self._v = value

    # -- views ----------------------------------------------------------
    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Coordinates in the power basis (length 1 for Q and F_p)."""
        kind = self.field.kind
        if kind == "extension":
            nums, den = self._v
            return tuple(Fraction(n, den) for n in nums)
        return (Fraction(self._v),)

    @property
    def residue(self) -> int:
        if self.field.kind != "prime":
            raise FieldError("not a prime-field element")
        return self._v

    def is_zero(self) -> bool:
        if self.field.kind == "extension":
            return not any(self._v[0])
        return self._v == 0

    def is_one(self) -> bool:
        if self.field.kind == "extension":
            nums, den = self._v
            return den == 1 and nums[0] == 1 and not any(nums[1:])
        return self._v == 1

    def sort_key(self):
        """A fixed total order used only for deterministic output."""
        if self.field.kind == "extension":
            return self.coefficients
        return (self._v,)

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "FieldScalar":
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise FieldError("field mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        if f.kind == "rational":
            return FieldScalar(f, self._v + other._v)
        if f.kind == "prime":
            return FieldScalar(f, (self._v + other._v) % f.characteristic)
        (a, da), (b, db) = self._v, other._v
        if da == db:
            return FieldScalar(f, _normalize([x + y for x, y in zip(a, b)], da))
        return FieldScalar(f, _normalize([x * db + y * da for x, y in zip(a, b)], da * db))

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.kind == "rational":
            return FieldScalar(f, -self._v)
        if f.kind == "prime":
            return FieldScalar(f, -self._v % f.characteristic)
        nums, den = self._v
        return FieldScalar(f, (tuple(-n for n in nums), den))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        if f.kind == "rational":
            return FieldScalar(f, self._v * other._v)
        if f.kind == "prime":
            return FieldScalar(f, self._v * other._v % f.characteristic)
        (a, da), (b, db) = self._v, other._v
        k = len(a)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        table, tden = f._table
        out = [c * tden for c in conv[:k]]
        for i, c in enumerate(conv[k:]):
            if c:
                for j, t in enumerate(table[i]):
                    out[j] += c * t
        return FieldScalar(f, _normalize(out, da * db * tden))

    __rmul__ = __mul__

    def inverse(self) -> "FieldScalar":
        """Multiplicative inverse; raises FieldError on zero or zero divisors."""
        if self.is_zero():
            raise FieldError("division by zero")
        f = self.field
        if f.kind == "rational":
            return FieldScalar(f, 1 / self._v)
        if f.kind == "prime":
            return FieldScalar(f, pow(self._v, -1, f.characteristic))
        # extended Euclid: s*a + t*m = g in Q[x]
        m = list(f.minimal_polynomial)
        a = _ptrim(list(self.coefficients))
        r0, r1 = m, a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        if not r1:
            # r0 is a nonconstant common factor of a and m
            lead = r0[-1]
            factor = [c / lead for c in r0]
            raise FieldError(
                "reducible modulus witness: common factor "
                + str([str(c) for c in factor])
                + " of the element and the minimal polynomial"
            )
        c = r1[0]
        return f([x / c for x in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- comparisons ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self._v == other._v
        if isinstance(other, (int, Fraction)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.kind, self._v))

    def __bool__(self):
        return not self.is_zero()

    # -- specialization -------------------------------------------------
    def specialize_mod_p(self, p: int, root: int | None = None) -> "FieldScalar":
        """Ring-homomorphic image in F_p, sending the generator to ``root``."""
        f = self.field
        target = prime_field(p)
        if f.kind == "prime":
            raise FieldError("already a prime-field element")
        if f.kind == "rational":
            q = self._v
            if q.denominator % p == 0:
                raise FieldError(f"bad prime {p}: denominator {q.denominator} divisible by p")
            return FieldScalar(target, q.numerator * pow(q.denominator, -1, p) % p)
        if root is None:
            raise FieldError("a root of the minimal polynomial mod p is required")
        check_root(f, p, root)
        nums, den = self._v
        if den % p == 0:
            raise FieldError(f"bad prime {p}: denominator {den} divisible by p")
        acc = 0
        for n in reversed(nums):
            acc = (acc * root + n) % p
        return FieldScalar(target, acc * pow(den, -1, p) % p)

    # -- text -----------------------------------------------------------
    def __str__(self) -> str:
        kind = self.field.kind
        if kind == "extension":
            return "[" + ",".join(str(c) for c in self.coefficients) + "]"
        return str(self._v)

    def __repr__(self) -> str:
        return f"FieldScalar({self.field}, {self})"


def check_root(f: FieldDescriptor, p: int, root: int) -> None:
    acc = 0
    for c in reversed(f.minimal_polynomial):
        if c.denominator % p == 0:
            raise FieldError(f"bad prime {p}: minimal polynomial denominator divisible by p")
        acc = (acc * root + c.numerator * pow(c.denominator, -1, p)) % p
    if acc:
        raise FieldError(f"{root} is not a root of the minimal polynomial mod {p}")


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _rational_token(token: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise ValueError(f"malformed rational token {token!r}")
    q = Fraction(token)
    return q


def parse_scalar(f: FieldDescriptor, token: str) -> FieldScalar:
    """Parse the textual scalar syntax used by arrangement files.

    Rationals: ``n`` or ``p/q``.  Extension elements: ``[c0,c1,...]`` (a bare
    rational is also accepted as a constant).  Prime field: decimal residues.
    """
    token = token.strip()
    if f.kind == "extension" and token.startswith("["):
        if not token.endswith("]"):
            raise ValueError(f"unterminated coefficient vector {token!r}")
        body = token[1:-1].strip()
        parts = [t.strip() for t in body.split(",")] if body else []
        if len(parts) != f.degree:
            raise ValueError(f"expected {f.degree} coefficients, got {len(parts)} in {token!r}")
        return f([_rational_token(t) for t in parts])
    if f.kind == "prime":
        if not re.match(r"^[+-]?\d+$", token):
            raise ValueError(f"malformed residue {token!r}")
        return f(int(token))
    return f(_rational_token(token))
