"""Reference arrangements, ingestion of coordinate files, and catalogue screening.

Only the dual Hesse arrangement is built in code (its nine lines are the
factors of (x^3 - y^3)(y^3 - z^3)(z^3 - x^3)).  Klein coordinates ship as the
data file ``data/klein.arr``, produced from the reflection group by
``demos/klein_from_group.py``.  Every other coordinate model is read from a
user directory of ``<name>.arr`` files (``coordinate_dir`` argument or the
``POGARR_CATALOG_DIR`` environment variable).
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable

from .arrangement import Arrangement, ArrangementError, ProjectiveLine, WeakCombinatorics, build_lattice
from .combinatorics import (
    CriterionError,
    melchior_check,
    mpog_quadratic_screen,
    naive_count_check,
    non_pog_screen,
    pog_tau_identity,
    simplicial_check,
    tjurina,
)
from .exactfield import extension
from .formats import ParseError, parse_arrangement, read_input
from .syzygy import classify

__all__ = [
    "CatalogError",
    "CatalogEntry",
    "ScreenRow",
    "ScreenReport",
    "dual_hesse",
    "klein",
    "embedded_entries",
    "get_entry",
    "ingest",
    "screen_catalog",
    "SIMPLICIAL_SCREEN_NAMES",
    "MPOG_NAMES",
    "WIMAN_PRINTED",
]

log = logging.getLogger(__name__)


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    name: str
    weak: WeakCombinatorics
    field_note: str = ""
    notes: list[str] = field(default_factory=list)
    expected: dict = field(default_factory=dict)
    loader: Callable[[], Arrangement] | None = field(default=None, repr=False)
    source: str | None = None
    discrepancy: bool = False

    def coordinates(self, coordinate_dir=None) -> Arrangement | None:
        """The coordinate model, if embedded, shipped, or present in ``coordinate_dir``."""
        if self.loader is not None:
            return self.loader()
        for base in filter(None, [coordinate_dir, os.environ.get("POGARR_CATALOG_DIR")]):
            path = Path(base) / f"{self.name}.arr"
            if path.exists():
                arr = ingest(path).coordinates()
                if arr.weak != self.weak:
                    raise CatalogError(f"{path}: lattice gives {arr.weak}, catalogue says {self.weak}")
                return arr
        return None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "weak": str(self.weak),
            "vector": [self.weak.d] + self.weak.vector(),
            "field": self.field_note,
            "expected": {k: list(v) if isinstance(v, tuple) else v for k, v in self.expected.items()},
            "notes": list(self.notes),
            "source": self.source,
        }


def dual_hesse() -> Arrangement:
    """x - w^i y, y - w^i z, z - w^i x over Q[w]/(w^2 + w + 1)."""
    K = extension([1, 1, 1])
    w, one, zero = K.gen(), K.one(), K.zero()
    lines = []
    for i in range(3):
        wi = w**i
        lines += [
            ProjectiveLine((one, -wi, zero)),
            ProjectiveLine((zero, one, -wi)),
            ProjectiveLine((-wi, zero, one)),
        ]
    arr = build_lattice(lines)
    if arr.weak.t(3) != 12 or arr.weak.t(2):
        raise CatalogError(f"dual Hesse model is corrupt: {arr.weak}")
    return arr


_KLEIN_CACHE: list[Arrangement] = []


def klein() -> Arrangement:
    if not _KLEIN_CACHE:
        text = resources.files("pogarr").joinpath("data/klein.arr").read_text(encoding="utf-8")
        arr = parse_arrangement(text, "klein.arr")
        if arr.weak != WeakCombinatorics(21, {3: 28, 4: 21}):
            raise CatalogError(f"Klein data file is corrupt: {arr.weak}")
        _KLEIN_CACHE.append(arr)
    return _KLEIN_CACHE[0]


def _w(d, *ts) -> WeakCombinatorics:
    return WeakCombinatorics.from_vector(d, ts)


WIMAN_PRINTED = WeakCombinatorics(45, {3: 120, 4: 28, 5: 36})

# name, weak vector, expected exponents, resolution head as listed
_SIMPLICIAL = [
    ("A(14,3)", _w(14, 9, 16, 4, 1), (7, 7, 8), "0 <- S <- S^3(-13) <- S^2(-20)+S(-21) <- S(-22)"),
    ("A(15,3)", _w(15, 12, 13, 9), (7, 8, 9), "0 <- S <- S^3(-14) <- S(-21)+S(-22)+S(-23) <- S(-24)"),
    ("A(15,5)", _w(15, 9, 22, 0, 3), (7, 8, 9), "0 <- S <- S^3(-14) <- S(-21)+S(-22)+S(-23) <- S(-24)"),
    ("A(16,7)", _w(16, 12, 19, 6, 0, 1), (8, 8, 9), "0 <- S <- S^3(-15) <- S^2(-23)+S(-24) <- S(-25)"),
    ("A(18,6)", _w(18, 18, 16, 12, 0, 1), (9, 9, 10), "0 <- S <- S^3(-17) <- S^2(-26)+S(-27) <- S(-28)"),
    ("A(18,8)", _w(18, 16, 22, 6, 2, 1), (9, 9, 10), "0 <- S <- S^3(-17) <- S^2(-26)+S(-27) <- S(-29)"),
    ("A(19,7)", _w(19, 21, 15, 15, 0, 1), (9, 10, 11), "0 <- S <- S^3(-18) <- S(-27)+S(-28)+S(-29) <- S(-30)"),
    ("A(24,2)", _w(24, 32, 32, 0, 12, 0, 0, 1), (9, 15, 16), "0 <- S <- S^3(-23) <- S(-32)+S(-38)+S(-39) <- S(-40)"),
    ("A(24,3)", _w(24, 31, 32, 9, 5, 3), (11, 13, 14), "0 <- S <- S^3(-23) <- S(-34)+S(-36)+S(-37) <- S(-38)"),
]

MPOG_NAMES = tuple(name for name, *_ in _SIMPLICIAL)
SIMPLICIAL_SCREEN_NAMES = ("A(13,3)",) + MPOG_NAMES


def _build_entries() -> list[CatalogEntry]:
    entries = [
        CatalogEntry(
            "dualHesse",
            WeakCombinatorics(9, {3: 12}),
            field_note="Q[w]/(w^2 + w + 1)",
            expected={"classification": "Free", "exponents": (4, 4), "line_profile": {3: 4}},
            loader=dual_hesse,
            source="embedded",
        ),
        CatalogEntry(
            "Klein",
            WeakCombinatorics(21, {3: 28, 4: 21}),
            field_note="Q[a]/(a^2 + a + 2)",
            expected={"classification": "Free", "exponents": (9, 11), "line_profile": {3: 4, 4: 4}},
            loader=klein,
            source="data/klein.arr",
        ),
        CatalogEntry(
            "Wiman",
            WeakCombinatorics(45, {3: 120, 4: 45, 5: 36}),
            field_note="needs Q(sqrt 5, sqrt -3); supply Wiman.arr",
            expected={"classification": "Free", "exponents": (19, 25), "line_profile": {3: 8, 4: 4, 5: 4}},
            notes=[
                f"printed vector {WIMAN_PRINTED} fails the naive count by "
                f"{naive_count_check(WIMAN_PRINTED).residual}; the per-line profile "
                "(8 triple, 4 quadruple, 4 quintuple points) forces t4 = 45, stored here"
            ],
            discrepancy=True,
        ),
        CatalogEntry(
            "A(13,3)",
            _w(13, 10, 10, 3, 2),
            field_note="real; supply A(13,3).arr",
            expected={"classification": "not POG", "mdr": 5, "surviving_candidate": (11, 4, 9)},
        ),
    ]
    for name, weak, exps, resolution in _SIMPLICIAL:
        notes = []
        if name == "A(18,8)":
            notes.append(
                "listed resolution ends in S(-29) while A(18,6) with the same exponents "
                "ends in S(-28); every other listing has last term S(-(d + d3)); "
                "relation degrees are not computed here"
            )
        entries.append(
            CatalogEntry(
                name,
                weak,
                field_note=f"real; supply {name}.arr",
                expected={"classification": "MPOG", "exponents": exps, "resolution": resolution},
                notes=notes,
            )
        )
    for e in entries:
        _validate(e)
    return entries


def _validate(e: CatalogEntry) -> None:
    if not naive_count_check(e.weak).passed and not e.discrepancy:
        raise CatalogError(f"{e.name}: {e.weak} fails the naive count without a discrepancy note")
    exps = e.expected.get("exponents")
    if exps and len(exps) == 3:
        d, tau = e.weak.d, tjurina(e.weak)
        d1, d2, d3 = exps
        if not pog_tau_identity(d, d1, d2, d3, tau).passed:
            raise CatalogError(f"{e.name}: expected exponents {exps} contradict tau = {tau}")
        if e.expected.get("classification") == "MPOG" and d1 not in mpog_quadratic_screen(d, tau):
            raise CatalogError(f"{e.name}: d1 = {d1} is not a root of the MPOG quadratic for tau = {tau}")


_ENTRIES: list[CatalogEntry] = []


def embedded_entries() -> list[CatalogEntry]:
    if not _ENTRIES:
        _ENTRIES.extend(_build_entries())
    return list(_ENTRIES)


def get_entry(name: str) -> CatalogEntry:
    for e in embedded_entries():
        if e.name == name:
            return e
    raise CatalogError(f"unknown catalogue entry {name!r}")


class _FileArrangement:
    def __init__(self, arr: Arrangement):
        self.arr = arr

    def __call__(self) -> Arrangement:
        return self.arr


def ingest(path) -> CatalogEntry:
    """Read an arrangement or weak-vector file into a validated entry."""
    path = Path(path)
    if not path.exists():
        raise CatalogError(f"{path}: no such file")
    obj = read_input(str(path))
    if isinstance(obj, WeakCombinatorics):
        chk = naive_count_check(obj)
        if not chk.passed:
            raise CatalogError(f"{path}: naive count fails, d^2 - d = {chk.lhs} but sum (r^2 - r) t_r = {chk.rhs}")
        return CatalogEntry(path.stem, obj, source=str(path))
    try:
        arr = build_lattice(obj.lines)
    except ArrangementError as exc:
        raise CatalogError(f"{path}: {exc}") from None
    arr.check_lattice()
    notes = []
    if arr.field.kind == "rational" and not arr.weak.t(arr.d):
        if not melchior_check(arr.weak).passed:
            notes.append("Melchior's inequality fails for a real arrangement")
            log.warning("%s: Melchior's inequality fails", path)
    return CatalogEntry(
        path.stem,
        arr.weak,
        field_note=str(arr.field),
        notes=notes,
        loader=_FileArrangement(arr),
        source=str(path),
    )


@dataclass
class ScreenRow:
    name: str
    d: int
    weak: str
    tau: int
    roots: list[int]
    screen_status: str
    candidates: list[tuple[int, int, int]]
    mpog_candidates: list[tuple[int, int, int]]
    simplicial: bool | None
    status: str  # ConfirmedMPOG, CandidateOnly, Excluded
    expected_exponents: tuple[int, ...] | None
    confirmed_exponents: tuple[int, ...] | None = None
    reason: str = ""

    @property
    def mpog_positive(self) -> bool:
        return self.status in ("ConfirmedMPOG", "CandidateOnly")

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "d": self.d,
            "weak": self.weak,
            "tau": self.tau,
            "quadratic_roots": self.roots,
            "non_pog_screen": self.screen_status,
            "candidates": [list(c) for c in self.candidates],
            "mpog_candidates": [list(c) for c in self.mpog_candidates],
            "simplicial": self.simplicial,
            "status": self.status,
            "expected_exponents": None if self.expected_exponents is None else list(self.expected_exponents),
            "confirmed_exponents": None if self.confirmed_exponents is None else list(self.confirmed_exponents),
            "reason": self.reason,
        }


@dataclass
class ScreenReport:
    rows: list[ScreenRow]

    def positives(self) -> list[str]:
        return [r.name for r in self.rows if r.mpog_positive]

    def as_dict(self) -> dict:
        return {"rows": [r.as_dict() for r in self.rows], "mpog_positive": self.positives()}

    def table(self) -> str:
        head = f"{'name':<10} {'d':>3} {'tau':>5} {'roots':<8} {'screen':<11} {'status':<14} exponents"
        out = [head, "-" * len(head)]
        for r in self.rows:
            exps = r.confirmed_exponents or r.expected_exponents
            out.append(
                f"{r.name:<10} {r.d:>3} {r.tau:>5} {','.join(map(str, r.roots)) or '-':<8} "
                f"{r.screen_status:<11} {r.status:<14} {exps if exps else '-'}"
            )
        return "\n".join(out)


def screen_catalog(entries=None, confirm: bool = False, mode: str = "exact", coordinate_dir=None) -> ScreenReport:
    """Tjurina number, MPOG quadratic, non-POG screen and optional syzygy confirmation.

    An entry is MPOG-positive when the quadratic has a root r <= d/2 and some
    screen candidate (h, d1, d2) has d1 among the roots and h = d2 + 1.
    """
    if entries is None:
        entries = [get_entry(n) for n in SIMPLICIAL_SCREEN_NAMES]
    rows = []
    for e in entries:
        w = e.weak
        if not naive_count_check(w).passed and not e.discrepancy:
            raise CatalogError(f"{e.name}: naive count fails without a discrepancy note")
        tau = tjurina(w)
        roots = mpog_quadratic_screen(w.d, tau)
        verdict = non_pog_screen(w)
        mp = [c for c in verdict.candidates if c[1] in roots and c[0] == c[2] + 1]
        try:
            simp = simplicial_check(w)
        except CriterionError:
            simp = None
        row = ScreenRow(
            e.name, w.d, str(w), tau, roots, verdict.status, list(verdict.candidates), mp, simp,
            "Excluded", e.expected.get("exponents"),
        )
        if not roots:
            row.reason = "MPOG quadratic has no integer root <= d/2"
            if verdict.not_pog:
                row.reason += "; not POG by the Poincare-type screen"
            elif confirm:
                arr = e.coordinates(coordinate_dir)
                if arr is not None:
                    prof = classify(arr, mode=mode)
                    row.confirmed_exponents = prof.exponents
                    if prof.mdr not in {c[1] for c in verdict.candidates}:
                        row.reason += f"; mdr = {prof.mdr} matches no screen candidate, so not POG"
        elif verdict.not_pog:
            row.reason = "not POG by the Poincare-type screen"
        elif not mp:
            row.reason = "no screen candidate compatible with an MPOG root"
        else:
            row.status = "CandidateOnly"
            arr = e.coordinates(coordinate_dir) if confirm else None
            if arr is not None:
                prof = classify(arr, mode=mode)
                row.confirmed_exponents = prof.exponents
                if prof.classification == "MPOG":
                    row.status = "ConfirmedMPOG"
                else:
                    row.status = "Excluded"
                    row.reason = f"syzygy computation gives {prof.classification} {prof.exponents}"
        rows.append(row)
    return ScreenReport(rows)
