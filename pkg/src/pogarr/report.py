"""Deterministic, float-free reports for the command line.

A report is a plain ``dict`` built in a fixed key order.  ``to_json`` writes
integers beyond 2**53 as decimal strings so that any JSON reader keeps them
exact; ``to_text`` renders the same content for terminals.
"""

from __future__ import annotations

import json

from .arrangement import Arrangement, WeakCombinatorics, delete_point_star, line_profile
from .catalog import CatalogEntry, ScreenReport
from .combinatorics import (
    CriterionError,
    h_range,
    hirzebruch_check,
    max_multiplicity_bound,
    melchior_check,
    mpog_quadratic_screen,
    naive_count_check,
    non_pog_screen,
    poincare_poly,
    simplicial_check,
    sum_r_minus_one,
    tjurina,
)
from .deletion import DeletionAnalysis, deletion_screen
from .syzygy import ResolutionProfile

__all__ = [
    "weak_report",
    "arrangement_report",
    "deletion_report",
    "point_star_report",
    "catalog_entry_report",
    "screen_report",
    "to_json",
    "to_text",
]

_SAFE = 2**53


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x if -_SAFE <= x <= _SAFE else str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, float):
        raise TypeError("floating point values are not allowed in reports")
    return str(x)


def to_json(report: dict) -> str:
    return json.dumps(_jsonable(report), indent=2, ensure_ascii=False)


def _check(name: str, passed: bool | None, detail: str) -> dict:
    return {"check": name, "result": "n/a" if passed is None else "pass" if passed else "FAIL", "detail": detail}


def _invariants(w: WeakCombinatorics) -> tuple[dict, list[dict]]:
    d = w.d
    checks = []
    inv = {
        "tau": tjurina(w),
        "max_multiplicity": w.max_multiplicity,
        "point_count": w.point_count,
        "sum_r_minus_one": sum_r_minus_one(w),
    }
    nc = naive_count_check(w)
    checks.append(_check("naive count d^2 - d = sum (r^2 - r) t_r", nc.passed, f"{nc.lhs} vs {nc.rhs}, residual {nc.residual}"))
    ident = (d * d - d) - sum_r_minus_one(w) == inv["tau"]
    checks.append(_check("tau = d^2 - d - sum (r-1) t_r", ident, f"{inv['tau']}"))
    if d >= 3:
        b = max_multiplicity_bound(d)
        inv["pog_max_multiplicity_bound"] = b
        inv["meets_pog_max_multiplicity_bound"] = w.max_multiplicity >= b
    pencil = d < 3 or bool(w.t(d))
    if not pencil:
        mc = melchior_check(w)
        inv["simplicial"] = simplicial_check(w)
        checks.append(_check("Melchior t2 >= 3 + sum (r-3) t_r (real realizability)", mc.passed, f"{mc.lhs} vs {mc.rhs}"))
    else:
        inv["simplicial"] = None
    try:
        hz = hirzebruch_check(w)
        checks.append(_check("Hirzebruch t2 + t3 >= d + sum (r-4) t_r", hz.passed, f"{hz.lhs} vs {hz.rhs}"))
    except CriterionError as exc:
        checks.append(_check("Hirzebruch t2 + t3 >= d + sum (r-4) t_r", None, str(exc)))
    return inv, checks


def _screen(w: WeakCombinatorics, verbose: bool = False) -> dict:
    if w.max_multiplicity < 2 or w.d < 3:
        return {"status": "n/a"}
    hr = h_range(w)
    polys = [{"h": h, "polynomial": str(p := poincare_poly(w, h)), "split": list(p.split) if p.split else None} for h in hr]
    v = non_pog_screen(w)
    out = {
        "h_range": [hr.start, hr.stop - 1] if len(hr) else [],
        "polynomial": f"1 + {w.d}t + ({sum_r_minus_one(w)} - h)t^2",
        "status": v.status,
        "candidates": [list(c) for c in v.candidates],
        "mpog_quadratic_roots": mpog_quadratic_screen(w.d, tjurina(w)),
        "polynomials": polys,
    }
    if verbose:
        out["unfiltered_candidates"] = [list(c) for c in v.unfiltered]
    return out


def weak_report(w: WeakCombinatorics, verbose: bool = False) -> dict:
    inv, checks = _invariants(w)
    return {
        "input": str(w),
        "provenance": w.provenance,
        "weak_combinatorics": {"d": w.d, "t": {f"t{r}": t for r, t in w.counts}},
        "invariants": inv,
        "screen": _screen(w, verbose),
        "checks": checks,
    }


def _profile_dict(p: ResolutionProfile | None):
    return None if p is None else p.as_dict()


def arrangement_report(
    arr: Arrangement,
    source: str,
    profile: ResolutionProfile | None = None,
    extra_checks: list[dict] | None = None,
    verbose: bool = False,
) -> dict:
    w = arr.weak
    inv, checks = _invariants(w)
    checks += extra_checks or []
    rep = {
        "input": source,
        "field": str(arr.field),
        "provenance": w.provenance,
        "weak_combinatorics": {"d": w.d, "t": {f"t{r}": t for r, t in w.counts}},
        "invariants": inv,
        "screen": _screen(w, verbose),
        "resolution": _profile_dict(profile),
        "checks": checks,
    }
    if profile is not None and profile.classification == "Free":
        rep["screen"]["note"] = "the screen presumes a non-free arrangement"
    if verbose:
        rep["lattice"] = [
            {"point": [str(c) for c in pt.coordinates], "lines": list(pt.incident_lines)} for pt in arr.lattice
        ]
        rep["line_profiles"] = [
            {str(r): n for r, n in line_profile(arr, i).items()} for i in range(arr.d)
        ]
    return rep


def deletion_report(source: str, analyses: list[DeletionAnalysis], aggregate: bool = False) -> dict:
    rows = [a.as_dict() for a in analyses]
    rep = {"input": source, "deletions": rows}
    if aggregate:
        groups: dict = {}
        for a in analyses:
            key = (a.verdict, a.classification, a.deletion_exponents, a.restriction_count, str(a.deletion_weak))
            groups.setdefault(key, []).append(a.removed_line)
        rep["orbits"] = [
            {
                "lines": lines,
                "count": len(lines),
                "verdict": k[0],
                "classification": k[1],
                "deletion_exponents": None if k[2] is None else list(k[2]),
                "restriction_count": k[3],
                "deletion_weak": k[4],
            }
            for k, lines in groups.items()
        ]
    return rep


def point_star_report(source: str, arr: Arrangement, p: int, parent_exponents=None) -> dict:
    child = delete_point_star(arr, p)
    pt = arr.lattice[p]
    out = {
        "input": source,
        "point": {"index": p, "coordinates": [str(c) for c in pt.coordinates], "multiplicity": pt.multiplicity},
        "removed_lines": list(pt.incident_lines),
        "remaining_lines": child.d,
    }
    if child.d < 3:
        out["weak_combinatorics"] = None
        out["screen"] = {"status": "n/a", "reason": "fewer than three lines remain"}
        return out
    w = child.weak
    v = deletion_screen(w, parent_exponents)
    out["weak_combinatorics"] = str(w)
    out["screen"] = _screen(w) | {"status": v.status, "candidates": [list(c) for c in v.candidates]}
    return out


def catalog_entry_report(e: CatalogEntry) -> dict:
    return e.as_dict() | {"tau": tjurina(e.weak), "naive_count_residual": naive_count_check(e.weak).residual}


def screen_report(r: ScreenReport) -> dict:
    return r.as_dict()


def _lines(obj, indent: int = 0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                yield f"{pad}{k}:"
                yield from _lines(v, indent + 1)
            else:
                yield f"{pad}{k}: {_inline(v)}"
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, dict) and "check" in v:
                yield f"{pad}[{v['result']:>4}] {v['check']}  ({v['detail']})"
            elif isinstance(v, dict) and all(not isinstance(x, dict) for x in v.values()) and len(_inline(v)) <= 100:
                yield f"{pad}- {_inline(v)}"
            elif isinstance(v, (dict, list)) and not _flat(v):
                yield f"{pad}-"
                yield from _lines(v, indent + 1)
            else:
                yield f"{pad}- {_inline(v)}"


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)
    return False


def _inline(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_inline(x)}" for k, x in v.items()) + "}"
    return str(v)


def to_text(report: dict) -> str:
    return "\n".join(_lines(report))
