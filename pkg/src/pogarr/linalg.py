"""Exact and modular elimination backends for the syzygy computations.

Matrices arrive as sparse columns ``{row: FieldScalar}``.  Three backends
share one small interface (``nullspace``, ``rank``, ``scale``):

``ExactBackend``
    Certified exact ranks.  Q-matrices are cleared to integers row by row and
    handed to FLINT's fraction-free integer nullspace.  A matrix over
    K = Q[a]/(m) of degree k is first rewritten over Q by restriction of
    scalars (each entry c becomes the k x k matrix of multiplication by c), so
    every K-dimension is the Q-dimension divided by k.  F_p matrices go to
    FLINT's word-size modular routines.
``ModularBackend``
    One prime p and one root of m mod p; entries are specialized to F_p.
    Ranks can only drop under specialization, so results are probabilistic.
``PythonBackend``
    Pure Python Gauss-Jordan over FieldScalar with fewest-term pivoting.  Slow;
    used as an independent reference on small inputs.

Vectors returned by ``nullspace`` live in backend coordinates: the entry for
column ``c`` and power ``j`` of the generator sits at ``c * scale + j``.
"""

from __future__ import annotations

import math
from typing import Sequence

import flint
from sympy import nextprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor_sqf

from .exactfield import FieldDescriptor, FieldError, FieldScalar, check_root
from .poly import monomial_index, monomials

__all__ = [
    "ExactBackend",
    "ModularBackend",
    "PythonBackend",
    "roots_mod_p",
    "default_primes",
    "rref_python",
]

Columns = Sequence[dict[int, FieldScalar]]


def roots_mod_p(f: FieldDescriptor, p: int) -> list[int]:
    """Roots of the minimal polynomial of ``f`` in F_p, ascending."""
    coeffs = []
    for c in reversed(f.minimal_polynomial):
        if c.denominator % p == 0:
            return []
        coeffs.append(c.numerator * pow(c.denominator, -1, p) % p)
    _, factors = gf_factor_sqf(coeffs, p, ZZ)
    return sorted(int(-fac[1]) % p for fac in factors if len(fac) == 2)


def default_primes(f: FieldDescriptor, count: int = 3, start: int = 2**61) -> list[tuple[int, int | None]]:
    """``count`` primes >= ``start`` usable for ``f``, each with a root of m."""
    if f.kind == "prime":
        raise FieldError("modular mode is meaningless over a prime field")
    out = []
    p = start
    while len(out) < count:
        p = nextprime(p)
        if f.kind == "rational":
            out.append((p, None))
            continue
        roots = roots_mod_p(f, p)
        if roots:
            out.append((p, roots[0]))
    return out


def prime_with_root(f: FieldDescriptor, p: int) -> tuple[int, int | None]:
    if f.kind == "rational":
        return p, None
    roots = roots_mod_p(f, p)
    if not roots:
        raise FieldError(f"prime {p} admits no root of the minimal polynomial")
    return p, roots[0]


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _assemble(prepared, k: int, scale: int):
    """Flat row-major entries of the degree-k Jacobian map from prepared slots.

    ``prepared`` holds, per partial derivative, pairs (exponent, block) where
    block is a scale x scale integer matrix given as a flat row-major list.
    """
    deg = prepared[1]
    rindex = monomial_index(deg + k)
    src = monomials(k)
    n_rows, n_cols = len(rindex) * scale, 3 * len(src) * scale
    flat = [0] * (n_rows * n_cols)
    col = 0
    for terms in prepared[0]:
        for m in src:
            m0, m1, m2 = m
            cbase = col * scale
            for (e0, e1, e2), blk in terms:
                rbase = rindex[(e0 + m0, e1 + m1, e2 + m2)] * scale
                if scale == 1:
                    flat[rbase * n_cols + cbase] = blk[0]
                    continue
                for i in range(scale):
                    off = (rbase + i) * n_cols + cbase
                    flat[off:off + scale] = blk[i * scale:(i + 1) * scale]
            col += 1
    return n_rows, n_cols, flat


class ExactBackend:
    label = "exact"

    def __init__(self, field: FieldDescriptor):
        self.field = field
        self.scale = field.degree
        self._blocks: dict = {}

    def _block(self, c: FieldScalar):
        # k x k rational matrix of multiplication by c, as (int rows, den)
        key = c._v
        blk = self._blocks.get(key)
        if blk is None:
            f = self.field
            a = f.gen()
            power = f.one()
            cols = []
            for _ in range(self.scale):
                cols.append((c * power)._v)
                power = power * a
            den = 1
            for _, d in cols:
                den = _lcm(den, d)
            rows = [[cols[j][0][i] * (den // cols[j][1]) for j in range(self.scale)] for i in range(self.scale)]
            blk = (rows, den)
            self._blocks[key] = blk
        return blk

    def _matrix(self, n_rows: int, n_cols: int, columns: Columns):
        f = self.field
        if f.kind == "prime":
            flat = [0] * (n_rows * n_cols)
            for c, col in enumerate(columns):
                for r, v in col.items():
                    flat[r * n_cols + c] = v._v
            return flint.nmod_mat(n_rows, n_cols, flat, f.characteristic)
        k = self.scale
        width = n_cols * k
        rows: list[dict[int, tuple[int, int]]] = [dict() for _ in range(n_rows * k)]
        for c, col in enumerate(columns):
            for r, v in col.items():
                if f.kind == "rational":
                    rows[r][c] = (v._v.numerator, v._v.denominator)
                    continue
                blk, den = self._block(v)
                for i in range(k):
                    row = rows[r * k + i]
                    for j in range(k):
                        if blk[i][j]:
                            row[c * k + j] = (blk[i][j], den)
        flat = [0] * (len(rows) * width)
        for i, row in enumerate(rows):
            den = 1
            for _, d in row.values():
                den = _lcm(den, d)
            base = i * width
            for c, (n, d) in row.items():
                flat[base + c] = n * (den // d)
        return flint.fmpz_mat(len(rows), width, flat)

    def prepare(self, jac):
        """Integer multiplication blocks for the Jacobian, scaled by one common denominator."""
        f = self.field
        raw, den = [], 1
        for g in jac:
            terms = []
            for e, c in g.terms.items():
                if f.kind == "prime":
                    terms.append((e, ([c._v], 1)))
                elif f.kind == "rational":
                    terms.append((e, ([c._v.numerator], c._v.denominator)))
                else:
                    rows, d = self._block(c)
                    terms.append((e, ([x for r in rows for x in r], d)))
                den = _lcm(den, terms[-1][1][1])
            raw.append(terms)
        slots = [[(e, [x * (den // d) for x in blk]) for e, (blk, d) in terms] for terms in raw]
        return slots, jac[0].degree

    def jacobian_nullspace(self, prepared, k: int) -> list[list]:
        n_rows, n_cols, flat = _assemble(prepared, k, self.scale)
        if self.field.kind == "prime":
            m = flint.nmod_mat(n_rows, n_cols, flat, self.field.characteristic)
        else:
            m = flint.fmpz_mat(n_rows, n_cols, flat)
        basis, nullity = m.nullspace()
        return [list(v) for v in basis.transpose().tolist()[:nullity]]

    def nullspace(self, n_rows: int, n_cols: int, columns: Columns) -> list[list]:
        width = n_cols * self.scale
        if n_rows == 0:
            return [[int(i == j) for i in range(width)] for j in range(width)]
        m = self._matrix(n_rows, n_cols, columns)
        basis, nullity = m.nullspace()
        cols = basis.transpose().tolist()
        return [list(v) for v in cols[:nullity]]

    def rank(self, vectors: list[list], length: int) -> int:
        if not vectors:
            return 0
        flat = [x for v in vectors for x in v]
        if self.field.kind == "prime":
            return flint.nmod_mat(len(vectors), length, [int(x) for x in flat], self.field.characteristic).rank()
        return flint.fmpz_mat(len(vectors), length, flat).rank()


class ModularBackend:
    """Computation over F_p after sending the generator of the field to ``root``."""

    scale = 1

    def __init__(self, field: FieldDescriptor, p: int, root: int | None = None):
        if field.kind == "extension":
            if root is None:
                p, root = prime_with_root(field, p)
            check_root(field, p, root)
        elif field.kind == "prime":
            raise FieldError("modular mode is meaningless over a prime field")
        self.field, self.p, self.root = field, p, root
        self.label = f"mod {p}"
        self._cache: dict = {}

    def _spec(self, v: FieldScalar) -> int:
        key = v._v
        out = self._cache.get(key)
        if out is None:
            out = v.specialize_mod_p(self.p, self.root)._v
            self._cache[key] = out
        return out

    def prepare(self, jac):
        slots = [[(e, [self._spec(c)]) for e, c in g.terms.items()] for g in jac]
        return slots, jac[0].degree

    def jacobian_nullspace(self, prepared, k: int) -> list[list]:
        n_rows, n_cols, flat = _assemble(prepared, k, 1)
        basis, nullity = flint.nmod_mat(n_rows, n_cols, flat, self.p).nullspace()
        return [[int(x) for x in v] for v in basis.transpose().tolist()[:nullity]]

    def nullspace(self, n_rows: int, n_cols: int, columns: Columns) -> list[list]:
        if n_rows == 0:
            return [[int(i == j) for i in range(n_cols)] for j in range(n_cols)]
        flat = [0] * (n_rows * n_cols)
        for c, col in enumerate(columns):
            for r, v in col.items():
                flat[r * n_cols + c] = self._spec(v)
        basis, nullity = flint.nmod_mat(n_rows, n_cols, flat, self.p).nullspace()
        cols = basis.transpose().tolist()
        return [[int(x) for x in v] for v in cols[:nullity]]

    def rank(self, vectors: list[list], length: int) -> int:
        if not vectors:
            return 0
        flat = [int(x) for v in vectors for x in v]
        return flint.nmod_mat(len(vectors), length, flat, self.p).rank()


def rref_python(rows: list[dict[int, FieldScalar]], n_cols: int) -> tuple[list[int], list[dict[int, FieldScalar]]]:
    """Gauss-Jordan on sparse rows; returns pivot columns and the pivot rows.

    The pivot for each column is the candidate row with the fewest nonzero
    entries, which keeps fill-in (and scalar growth) down.
    """
    rows = [dict(r) for r in rows if r]
    pivots: list[int] = []
    reduced: list[dict[int, FieldScalar]] = []
    for c in range(n_cols):
        best = None
        for idx, r in enumerate(rows):
            if c in r and (best is None or len(r) < len(rows[best])):
                best = idx
        if best is None:
            continue
        prow = rows.pop(best)
        inv = prow[c].inverse()
        prow = {k: v * inv for k, v in prow.items()}
        for group in (rows, reduced):
            for r in group:
                if c in r:
                    fac = r[c]
                    for k, v in prow.items():
                        nv = r[k] - fac * v if k in r else -(fac * v)
                        if nv.is_zero():
                            r.pop(k, None)
                        else:
                            r[k] = nv
        rows = [r for r in rows if r]
        pivots.append(c)
        reduced.append(prow)
    return pivots, reduced


class PythonBackend:
    label = "python"
    scale = 1

    def __init__(self, field: FieldDescriptor):
        self.field = field

    def nullspace(self, n_rows: int, n_cols: int, columns: Columns) -> list[list]:
        rows: list[dict[int, FieldScalar]] = [dict() for _ in range(n_rows)]
        for c, col in enumerate(columns):
            for r, v in col.items():
                rows[r][c] = v
        pivots, reduced = rref_python(rows, n_cols)
        zero, one = self.field.zero(), self.field.one()
        pivot_set = set(pivots)
        out = []
        for free in range(n_cols):
            if free in pivot_set:
                continue
            v = [zero] * n_cols
            v[free] = one
            for pc, prow in zip(pivots, reduced):
                if free in prow:
                    v[pc] = -prow[free]
            out.append(v)
        return out

    def rank(self, vectors: list[list], length: int) -> int:
        rows = [{i: x for i, x in enumerate(v) if not x.is_zero()} for v in vectors]
        pivots, _ = rref_python(rows, length)
        return len(pivots)
