"""Invariants and plus-one generation criteria computed from weak combinatorics alone.

Every function accepts either a :class:`~pogarr.arrangement.WeakCombinatorics`
or an :class:`~pogarr.arrangement.Arrangement` (whose lattice is then used).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from .arrangement import Arrangement, WeakCombinatorics

__all__ = [
    "CriterionError",
    "Check",
    "PoincareQuadratic",
    "ScreenVerdict",
    "as_weak",
    "tjurina",
    "naive_count_check",
    "simplicial_check",
    "melchior_check",
    "hirzebruch_check",
    "max_multiplicity_bound",
    "sum_r_minus_one",
    "h_range",
    "poincare_poly",
    "split_over_rationals",
    "non_pog_screen",
    "mpog_quadratic_screen",
    "defect",
    "pog_tau_identity",
    "identity_check_thm33",
    "point_count_lower_bound",
    "free_tau",
]


class CriterionError(ValueError):
    """A criterion was called outside its hypotheses."""


class Check(NamedTuple):
    passed: bool
    lhs: int
    rhs: int

    @property
    def residual(self) -> int:
        return self.lhs - self.rhs


def as_weak(x) -> WeakCombinatorics:
    if isinstance(x, Arrangement):
        return x.weak
    if isinstance(x, WeakCombinatorics):
        return x
    if isinstance(x, str):
        return WeakCombinatorics.parse(x)
    raise TypeError(f"expected weak combinatorics or an arrangement, got {type(x).__name__}")


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def tjurina(w) -> int:
    """Total Tjurina number sum (r-1)^2 t_r (all points are ordinary)."""
    w = as_weak(w)
    return sum((r - 1) ** 2 * t for r, t in w.counts)


def sum_r_minus_one(w) -> int:
    w = as_weak(w)
    return sum((r - 1) * t for r, t in w.counts)


def naive_count_check(w) -> Check:
    """d^2 - d against sum (r^2 - r) t_r; ``residual`` is their difference."""
    w = as_weak(w)
    return Check(
        w.d * w.d - w.d == sum((r * r - r) * t for r, t in w.counts),
        w.d * w.d - w.d,
        sum((r * r - r) * t for r, t in w.counts),
    )


def _not_pencil(w: WeakCombinatorics) -> None:
    if w.t(w.d) or w.d < 3:
        raise CriterionError("criterion needs an arrangement of d >= 3 lines that is not a pencil")


def simplicial_check(w) -> bool:
    """Equality case t_2 = 3 + sum_{r>=4} (r-3) t_r."""
    w = as_weak(w)
    _not_pencil(w)
    return w.t(2) == 3 + sum((r - 3) * t for r, t in w.counts if r >= 4)


def melchior_check(w) -> Check:
    """t_2 >= 3 + sum_{r>=4} (r-3) t_r; failure means the vector is not realizable over R."""
    w = as_weak(w)
    _not_pencil(w)
    rhs = 3 + sum((r - 3) * t for r, t in w.counts if r >= 4)
    return Check(w.t(2) >= rhs, w.t(2), rhs)


def hirzebruch_check(w) -> Check:
    """t_2 + t_3 >= d + sum_{r>=4} (r-4) t_r, for d >= 6 and t_d = t_{d-1} = 0."""
    w = as_weak(w)
    if w.d < 6:
        raise CriterionError("Hirzebruch's inequality needs d >= 6")
    if w.t(w.d) or w.t(w.d - 1):
        raise CriterionError("Hirzebruch's inequality needs t_d = t_(d-1) = 0 (supersolvable case excluded)")
    lhs = w.t(2) + w.t(3)
    rhs = w.d + sum((r - 4) * t for r, t in w.counts if r >= 4)
    return Check(lhs >= rhs, lhs, rhs)


def max_multiplicity_bound(d: int) -> int:
    """ceil(4d / (d + 4)): a POG arrangement of d lines has a point at least this heavy."""
    if d < 3:
        raise CriterionError("need d >= 3")
    return _ceil(Fraction(4 * d, d + 4))


def h_range(w) -> range:
    """Admissible third exponents ceil(2d/m - 2) .. d - 2."""
    w = as_weak(w)
    m = w.max_multiplicity
    if m < 2:
        raise CriterionError("weak combinatorics has no intersection points")
    lo = _ceil(Fraction(2 * w.d, m) - 2)
    return range(lo, w.d - 1)


@dataclass(frozen=True)
class PoincareQuadratic:
    """1 + d t + quad_coeff t^2 with quad_coeff = sum (r-1) t_r - h."""

    d: int
    quad_coeff: int
    h: int
    split: tuple[int, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.split is not None:
            d1, d2 = self.split
            if not (0 <= d1 <= d2 and d1 + d2 == self.d and d1 * d2 == self.quad_coeff):
                raise ValueError(f"inconsistent split {self.split}")

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (1, self.d, self.quad_coeff)

    def __str__(self) -> str:
        s = f"1 + {self.d}t"
        c = self.quad_coeff
        return s + (f" + {c}t^2" if c >= 0 else f" - {-c}t^2")


def poincare_poly(w, h: int, strict: bool = False) -> PoincareQuadratic:
    w = as_weak(w)
    if strict and h not in h_range(w):
        raise CriterionError(f"h={h} outside the admissible range")
    p = PoincareQuadratic(w.d, sum_r_minus_one(w) - h, h)
    s = split_over_rationals(p)
    return PoincareQuadratic(p.d, p.quad_coeff, h, s) if s else p


def split_over_rationals(p: PoincareQuadratic) -> tuple[int, int] | None:
    """(d1, d2) with 1 + d t + c t^2 = (1 + d1 t)(1 + d2 t), 0 <= d1 <= d2, if any."""
    d, c = p.d, p.quad_coeff
    disc = d * d - 4 * c
    if disc < 0:
        return None
    s = isqrt(disc)
    if s * s != disc or (d + s) % 2:
        return None
    d1, d2 = (d - s) // 2, (d + s) // 2
    if d1 < 0:
        return None
    return d1, d2


@dataclass(frozen=True)
class ScreenVerdict:
    status: str  # "NotPOG" or "Candidates"
    candidates: tuple[tuple[int, int, int], ...]
    unfiltered: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if (self.status == "NotPOG") != (not self.candidates):
            raise ValueError("status NotPOG exactly when no candidate survives")

    @property
    def not_pog(self) -> bool:
        return self.status == "NotPOG"


def non_pog_screen(w) -> ScreenVerdict:
    """Split the Poincare-type quadratic for every admissible h.

    Candidates are triples (h, d1, d2); those with d2 > h violate the order
    d1 <= d2 <= d3 and are dropped (kept in ``unfiltered``).
    """
    w = as_weak(w)
    raw = []
    for h in h_range(w):
        s = poincare_poly(w, h).split
        if s is not None:
            raw.append((h, s[0], s[1]))
    kept = tuple(c for c in raw if c[2] <= c[0])
    return ScreenVerdict("Candidates" if kept else "NotPOG", kept, tuple(raw))


def mpog_quadratic_screen(d: int, tau: int) -> list[int]:
    """Integer roots r <= d/2 of r^2 - r(d-1) + (d-1)^2 = tau + 2."""
    if d < 3:
        raise CriterionError("need d >= 3")
    c = (d - 1) ** 2 - tau - 2
    disc = (d - 1) ** 2 - 4 * c
    if disc < 0:
        return []
    s = isqrt(disc)
    if s * s != disc or (d - 1 + s) % 2:
        return []
    roots = sorted({(d - 1 - s) // 2, (d - 1 + s) // 2})
    return [r for r in roots if r >= 0 and 2 * r <= d]


def free_tau(d: int, d1: int) -> int:
    """(d-1)^2 - d1 (d - 1 - d1): the Tjurina number of a free curve with mdr d1."""
    return (d - 1) ** 2 - d1 * (d - 1 - d1)


def defect(d: int, d1: int, tau: int) -> int:
    """Defect from freeness given mdr ``d1``; defined here only for d1 <= d/2."""
    if 2 * d1 < d:
        return free_tau(d, d1) - tau
    if 2 * d1 == d:
        return _ceil(Fraction(3 * (d - 1) ** 2, 4)) - tau
    raise CriterionError("branch undefined for this artifact: mdr exceeds d/2")


def pog_tau_identity(d: int, d1: int, d2: int, d3: int, tau: int) -> Check:
    """tau = (d-1)^2 - d1 (d - d1 - 1) - (d3 - d2 + 1) for exponents with d1 + d2 = d."""
    if d1 + d2 != d:
        raise CriterionError(f"d1 + d2 = {d1 + d2} differs from d = {d}")
    rhs = (d - 1) ** 2 - d1 * (d - d1 - 1) - (d3 - d2 + 1)
    return Check(tau == rhs, tau, rhs)


class IdentityReport(NamedTuple):
    passed: bool
    sum_r_minus_one: int
    d1d2_plus_d3: int
    upper_bound: int
    bound_ok: bool


def identity_check_thm33(w, d1: int, d2: int, d3: int) -> IdentityReport:
    """sum (r-1) t_r = d1 d2 + d3, plus the bound sum <= (d1+1)(d2+1) - 3."""
    s = sum_r_minus_one(w)
    bound = (d1 + 1) * (d2 + 1) - 3
    return IdentityReport(s == d1 * d2 + d3 and s <= bound, s, d1 * d2 + d3, bound, s <= bound)


def point_count_lower_bound(d1: int, d2: int, d3: int) -> int:
    """ceil((d1 d2 + d1 + d2 + d3) / 3), a lower bound on the number of points."""
    if d1 + d2 < 6:
        raise CriterionError("bound needs d = d1 + d2 >= 6")
    return _ceil(Fraction(d1 * d2 + d1 + d2 + d3, 3))
