"""Line arrangements in the projective plane and their intersection lattices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .exactfield import FieldDescriptor, FieldError, FieldScalar, prime_field

__all__ = [
    "ArrangementError",
    "ProjectiveLine",
    "IntersectionPoint",
    "Arrangement",
    "WeakCombinatorics",
    "canonical",
    "intersect",
    "build_lattice",
    "weak_combinatorics",
    "line_profile",
    "delete_line",
    "delete_point_star",
    "specialize_arrangement",
]


class ArrangementError(ValueError):
    pass


def canonical(v: Sequence[FieldScalar]) -> tuple[FieldScalar, FieldScalar, FieldScalar]:
    """Scale a projective triple so that its first nonzero entry is 1."""
    for x in v:
        if not x.is_zero():
            if x.is_one():
                return tuple(v)
            inv = x.inverse()
            return tuple(y * inv for y in v)
    raise ArrangementError("zero vector is not a projective point")


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True)
class ProjectiveLine:
    """The line a*x + b*y + c*z = 0, stored in canonical scale."""

    coefficients: tuple[FieldScalar, FieldScalar, FieldScalar]

    def __post_init__(self):
        if len(self.coefficients) != 3:
            raise ArrangementError("a line needs exactly three coefficients")
        fields = {c.field for c in self.coefficients}
        if len(fields) != 1:
            raise FieldError("field mismatch")
        object.__setattr__(self, "coefficients", canonical(self.coefficients))

    @classmethod
    def from_values(cls, field: FieldDescriptor, a, b, c) -> "ProjectiveLine":
        return cls((field(a), field(b), field(c)))

    @property
    def field(self) -> FieldDescriptor:
        return self.coefficients[0].field

    def key(self):
        return tuple(c._v for c in self.coefficients)

    def contains(self, point: Sequence[FieldScalar]) -> bool:
        a, b, c = self.coefficients
        return (a * point[0] + b * point[1] + c * point[2]).is_zero()

    def __str__(self):
        return " ".join(str(c) for c in self.coefficients)


@dataclass(frozen=True)
class IntersectionPoint:
    coordinates: tuple[FieldScalar, FieldScalar, FieldScalar]
    incident_lines: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.incident_lines)


def intersect(l1: ProjectiveLine, l2: ProjectiveLine) -> tuple[FieldScalar, ...]:
    """Common point of two distinct lines, in canonical scale."""
    p = _cross(l1.coefficients, l2.coefficients)
    if all(x.is_zero() for x in p):
        raise ArrangementError("coincident lines")
    return canonical(p)


@dataclass(frozen=True)
class WeakCombinatorics:
    """The vector (d; t_2, t_3, ...) of an arrangement.

    ``counts`` keeps only nonzero t_r.  ``provenance`` is ``"lattice-derived"``
    for vectors computed from coordinates and ``"asserted"`` otherwise.
    """

    d: int
    counts: tuple[tuple[int, int], ...]
    provenance: str = field(default="asserted", compare=False)

    def __init__(self, d: int, counts: Mapping[int, int] | Iterable[tuple[int, int]], provenance: str = "asserted"):
        items = dict(counts.items() if isinstance(counts, Mapping) else counts)
        for r, t in items.items():
            if r < 2:
                raise ArrangementError(f"multiplicity {r} < 2")
            if t < 0:
                raise ArrangementError(f"negative count t{r}={t}")
        if d < 0:
            raise ArrangementError("negative line count")
        object.__setattr__(self, "d", int(d))
        object.__setattr__(self, "counts", tuple(sorted((int(r), int(t)) for r, t in items.items() if t)))
        object.__setattr__(self, "provenance", provenance)

    @classmethod
    def from_vector(cls, d: int, ts: Sequence[int], provenance: str = "asserted") -> "WeakCombinatorics":
        """Build from the listing (d; t_2, t_3, ..., t_m)."""
        return cls(d, {r: t for r, t in enumerate(ts, start=2)}, provenance)

    @classmethod
    def parse(cls, text: str) -> "WeakCombinatorics":
        """Parse the inline form ``d=14;t2=9,t3=16,t4=4,t5=1``."""
        text = "".join(text.split())
        head, _, tail = text.partition(";")
        if not head.startswith("d="):
            raise ArrangementError(f"weak combinatorics must start with 'd=': {text!r}")
        try:
            d = int(head[2:])
        except ValueError:
            raise ArrangementError(f"bad line count in {text!r}") from None
        counts: dict[int, int] = {}
        for item in filter(None, tail.split(",")):
            key, eq, val = item.partition("=")
            if not eq or not key.startswith("t"):
                raise ArrangementError(f"bad entry {item!r} in {text!r}")
            try:
                r, t = int(key[1:]), int(val)
            except ValueError:
                raise ArrangementError(f"bad entry {item!r} in {text!r}") from None
            if r in counts:
                raise ArrangementError(f"t{r} given twice")
            counts[r] = t
        return cls(d, counts)

    def t(self, r: int) -> int:
        return dict(self.counts).get(r, 0)

    @property
    def max_multiplicity(self) -> int:
        return max((r for r, _ in self.counts), default=0)

    @property
    def point_count(self) -> int:
        return sum(t for _, t in self.counts)

    def vector(self) -> list[int]:
        """(t_2, ..., t_m) with zeros filled in."""
        return [self.t(r) for r in range(2, self.max_multiplicity + 1)]

    def __str__(self) -> str:
        return f"d={self.d};" + ",".join(f"t{r}={t}" for r, t in self.counts)


class Arrangement:
    """Distinct projective lines over one exact field, with a lazily built lattice."""

    def __init__(self, lines: Sequence[ProjectiveLine], field: FieldDescriptor | None = None):
        lines = tuple(lines)
        if field is None:
            if not lines:
                raise ArrangementError("cannot infer the field of an empty arrangement")
            field = lines[0].field
        seen: dict = {}
        for i, line in enumerate(lines):
            if line.field != field:
                raise FieldError("field mismatch")
            k = line.key()
            if k in seen:
                raise ArrangementError(f"duplicate line: lines {seen[k]} and {i} coincide")
            seen[k] = i
        self.field = field
        self.lines = lines

    @property
    def d(self) -> int:
        return len(self.lines)

    def __len__(self):
        return len(self.lines)

    def __repr__(self):
        return f"Arrangement(d={self.d}, field={self.field})"

    @cached_property
    def lattice(self) -> tuple[IntersectionPoint, ...]:
        groups: dict = {}
        coords: dict = {}
        lines = self.lines
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                p = intersect(lines[i], lines[j])
                k = tuple(x._v for x in p)
                if k not in groups:
                    groups[k] = set()
                    coords[k] = p
                groups[k].update((i, j))
        points = [IntersectionPoint(coords[k], tuple(sorted(s))) for k, s in groups.items()]
        points.sort(key=lambda pt: tuple(x.sort_key() for x in pt.coordinates))
        return tuple(points)

    def check_lattice(self) -> None:
        """Assert the pair-partition invariants of the lattice."""
        pairs = Counter()
        for pt in self.lattice:
            if pt.multiplicity < 2:
                raise ArrangementError("lattice point with fewer than two lines")
            for i in pt.incident_lines:
                if not self.lines[i].contains(pt.coordinates):
                    raise ArrangementError(f"line {i} misses point {pt.coordinates}")
            for a in pt.incident_lines:
                for b in pt.incident_lines:
                    if a < b:
                        pairs[a, b] += 1
        d = self.d
        if len(pairs) != d * (d - 1) // 2 or any(v != 1 for v in pairs.values()):
            raise ArrangementError("some pair of lines is not met exactly once")

    @cached_property
    def weak(self) -> WeakCombinatorics:
        tally = Counter(pt.multiplicity for pt in self.lattice)
        return WeakCombinatorics(self.d, tally, provenance="lattice-derived")

    def subarrangement(self, keep: Iterable[int]) -> "Arrangement":
        return Arrangement([self.lines[i] for i in sorted(set(keep))], self.field)


def build_lattice(lines: Sequence[ProjectiveLine]) -> Arrangement:
    """Arrangement of ``lines`` with its intersection lattice computed."""
    if len(lines) < 2:
        raise ArrangementError("an arrangement needs at least two lines")
    arr = Arrangement(lines)
    f = arr.field
    if f.kind == "prime" and f.characteristic <= arr.d:
        raise ArrangementError(f"characteristic {f.characteristic} must exceed the line count {arr.d}")
    arr.lattice
    return arr


def weak_combinatorics(arr: Arrangement) -> WeakCombinatorics:
    return arr.weak


def _check_line(arr: Arrangement, i: int) -> None:
    if not 0 <= i < arr.d:
        raise IndexError(f"line index {i} out of range 0..{arr.d - 1}")


def line_profile(arr: Arrangement, i: int) -> dict[int, int]:
    """Multiplicity -> number of lattice points on line ``i``."""
    _check_line(arr, i)
    tally = Counter(pt.multiplicity for pt in arr.lattice if i in pt.incident_lines)
    return dict(sorted(tally.items()))


def delete_line(arr: Arrangement, i: int) -> Arrangement:
    _check_line(arr, i)
    if arr.d < 3:
        raise ArrangementError("deletion needs at least three lines")
    return arr.subarrangement(j for j in range(arr.d) if j != i)


def delete_point_star(arr: Arrangement, p: int) -> Arrangement:
    """Remove every line through lattice point ``p``."""
    if not 0 <= p < len(arr.lattice):
        raise IndexError(f"point index {p} out of range 0..{len(arr.lattice) - 1}")
    gone = set(arr.lattice[p].incident_lines)
    return Arrangement([l for j, l in enumerate(arr.lines) if j not in gone], arr.field)


def deleted_weak(w: WeakCombinatorics, profile: Mapping[int, int]) -> WeakCombinatorics:
    """Weak combinatorics after deleting a line with the given point profile."""
    counts = dict(w.counts)
    for r, n in profile.items():
        counts[r] = counts.get(r, 0) - n
        if r > 2:
            counts[r - 1] = counts.get(r - 1, 0) + n
    if any(t < 0 for t in counts.values()):
        raise ArrangementError("profile is incompatible with the weak combinatorics")
    return WeakCombinatorics(w.d - 1, counts, provenance=w.provenance)


def specialize_arrangement(arr: Arrangement, p: int, root: int | None = None) -> Arrangement:
    """Reduce an arrangement over Q or Q[x]/(m) modulo a good prime ``p``.

    Raises FieldError naming the problem if ``p`` divides a denominator or
    makes two lines collide.
    """
    target = prime_field(p)
    lines = []
    for line in arr.lines:
        lines.append(ProjectiveLine(tuple(c.specialize_mod_p(p, root) for c in line.coefficients)))
    try:
        out = Arrangement(lines, target)
    except ArrangementError as exc:
        raise FieldError(f"bad prime {p}: {exc}") from None
    return out
