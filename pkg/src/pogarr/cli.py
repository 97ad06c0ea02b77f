"""Command line front end: ``pogarr analyze|screen|delete|catalog|verify``.

Exit status is 0 on success, 2 for invalid input (parse errors, bad indices,
inapplicable criteria) and 3 when an internal cross-check fails.  Every report
is printed either as indented text or, with ``--json``, as JSON whose integers
beyond 2**53 are strings.  The report layout is described in ``docs/report-schema.md``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .arrangement import Arrangement, ArrangementError, WeakCombinatorics, delete_line, deleted_weak, line_profile
from .catalog import CatalogError, embedded_entries, get_entry, screen_catalog
from .combinatorics import CriterionError
from .deletion import DichotomyError, analyze_deletion
from .exactfield import FieldError
from .formats import ParseError, read_input
from .report import (
    arrangement_report,
    catalog_entry_report,
    deletion_report,
    point_star_report,
    screen_report,
    to_json,
    to_text,
    weak_report,
)
from .syzygy import ConsistencyError, SyzygyError, classify, defining_polynomial, tau_from_milnor

EXIT_OK, EXIT_INVALID, EXIT_INCONSISTENT = 0, 2, 3
EXACT_LIMIT = 21  # default to exact mode up to this many lines
MILNOR_LIMIT = 9  # verify computes tau from the Milnor algebra only this far

_INVALID = (ParseError, ArrangementError, FieldError, CriterionError, DichotomyError, CatalogError, SyzygyError)


class UsageError(ValueError):
    pass


def _load(target: str):
    """A file path, an inline weak spec, or the name of a catalogue entry."""
    if Path(target).exists() or "=" in target:
        return read_input(target)
    try:
        entry = get_entry(target)
    except CatalogError:
        raise UsageError(f"{target}: no such file, inline spec or catalogue entry") from None
    arr = entry.coordinates()
    return arr if arr is not None else entry.weak


def _load_arrangement(target: str) -> Arrangement:
    obj = _load(target)
    if not isinstance(obj, Arrangement):
        raise UsageError(f"{target}: coordinates are required, got only weak combinatorics {obj}")
    return obj


def _mode(args, d: int) -> str:
    if args.mode:
        return args.mode
    return "exact" if d <= EXACT_LIMIT else "modular"


def _primes(text: str | None):
    if not text:
        return None
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"--primes expects comma-separated integers, got {text!r}") from None


def _pair(text: str | None):
    if text is None:
        return None
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--exponents expects d1,d2, got {text!r}") from None
    return (a, b)


def cmd_analyze(args) -> dict:
    obj = _load(args.input)
    if isinstance(obj, WeakCombinatorics):
        return weak_report(obj, args.verbose) | {"resolution": None}
    mode = _mode(args, obj.d)
    prof = classify(obj, mode=mode, primes=_primes(args.primes)) if obj.d >= 3 else None
    return arrangement_report(obj, args.input, prof, verbose=args.verbose)


def cmd_screen(args) -> dict:
    obj = _load(args.input)
    w = obj.weak if isinstance(obj, Arrangement) else obj
    return weak_report(w, args.verbose)


def cmd_delete(args) -> dict:
    arr = _load_arrangement(args.input)
    parent = _pair(args.exponents)
    if args.assume_free and parent is None:
        raise UsageError("--assume-free needs --exponents d1,d2")
    if args.point_star is not None:
        if not 0 <= args.point_star < len(arr.lattice):
            raise UsageError(f"point index {args.point_star} out of range 0..{len(arr.lattice) - 1}")
        return point_star_report(args.input, arr, args.point_star, parent)
    mode = _mode(args, arr.d)
    primes = _primes(args.primes)
    if parent is None or not args.assume_free:
        parent = classify(arr, mode=mode, primes=primes)
        if parent.classification != "Free":
            raise DichotomyError(f"dichotomy inapplicable: parent is {parent.classification} {parent.exponents}")
        if args.exponents and _pair(args.exponents) != parent.exponents:
            raise DichotomyError(f"given exponents {args.exponents} disagree with computed {parent.exponents}")
        parent = parent.exponents
    if args.all_lines:
        indices = range(arr.d)
    else:
        if not 0 <= args.line < arr.d:
            raise UsageError(f"line index {args.line} out of range 0..{arr.d - 1}")
        indices = [args.line]
    analyses = [
        analyze_deletion(arr, i, parent, assume_free=True, mode=mode, primes=primes, verify=args.verify)
        for i in indices
    ]
    return deletion_report(args.input, analyses, aggregate=args.all_lines)


def cmd_catalog(args) -> dict:
    if args.action == "list":
        return {
            "entries": [
                {"name": e.name, "weak": str(e.weak), "coordinates": e.loader is not None} for e in embedded_entries()
            ]
        }
    if args.action == "show":
        if not args.name:
            raise UsageError("catalog show needs an entry name")
        return catalog_entry_report(get_entry(args.name))
    rep = screen_catalog(confirm=args.confirm, mode=args.mode or "exact", coordinate_dir=args.coordinates)
    return screen_report(rep) | ({} if args.json else {"table": rep.table()})


def _check(name: str, ok: bool, detail: str) -> dict:
    return {"check": name, "result": "pass" if ok else "FAIL", "detail": detail}


def cmd_verify(args) -> dict:
    arr = _load_arrangement(args.input)
    arr.check_lattice()
    checks = [_check("lattice: every point lies on its incident lines and no others", True, f"{len(arr.lattice)} points")]
    for i in range(arr.d):
        if arr.d < 4:
            break
        pred = deleted_weak(arr.weak, line_profile(arr, i))
        got = delete_line(arr, i).weak
        if pred != got:
            raise ConsistencyError("profile update disagrees with the recomputed lattice", {"line": i, "predicted": str(pred), "lattice": str(got)})
    if arr.d >= 4:
        checks.append(_check("deletion profile update matches the recomputed lattice for every line", True, f"{arr.d} lines"))
    if arr.d < 3:
        return arrangement_report(arr, args.input, None, checks, args.verbose)
    mode = _mode(args, arr.d)
    prof = classify(arr, mode=mode, primes=_primes(args.primes))
    checks.append(_check("resolution profile passes all identities", True, f"{prof.classification} {prof.exponents}"))
    if arr.field.kind != "prime":
        other_mode = "modular" if mode == "exact" else "exact"
        other = classify(arr, mode=other_mode, primes=_primes(args.primes) if other_mode == "modular" else None)
        if other.key() != prof.key():
            raise ConsistencyError("exact and modular profiles differ", {mode: prof.as_dict(), other_mode: other.as_dict()})
        checks.append(_check(f"{other_mode} mode gives the same profile", True, other.mode))
    if arr.d <= MILNOR_LIMIT:
        value, stable = tau_from_milnor(defining_polynomial(arr))
        if not stable or value != prof.tau:
            raise ConsistencyError("Milnor algebra disagrees with the lattice Tjurina number", {"milnor": value, "lattice": prof.tau})
        checks.append(_check("tau from the Milnor algebra equals sum (r-1)^2 t_r", True, str(value)))
    return arrangement_report(arr, args.input, prof, checks, args.verbose)


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    dflt = argparse.SUPPRESS if suppress else None
    parser.add_argument("--mode", choices=["exact", "modular", "python"], default=dflt,
                        help=f"linear algebra backend (default: exact for d <= {EXACT_LIMIT}, else modular)")
    parser.add_argument("--primes", default=dflt, help="comma-separated primes for modular mode")
    parser.add_argument("--json", action="store_true", default=dflt if suppress else False, help="JSON output")
    parser.add_argument("--verbose", action="store_true", default=dflt if suppress else False,
                        help="include lattice, per-line profiles and unfiltered candidates")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pogarr", description="Freeness and plus-one generation of line arrangements.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="invariants, screen and syzygy classification")
    p.add_argument("input", help="arrangement file, weak spec, or catalogue name")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("screen", parents=[common], help="combinatorial screen only")
    p.add_argument("input", help="weak spec such as 'd=5;t2=10', a file, or a catalogue name")
    p.set_defaults(func=cmd_screen)

    p = sub.add_parser("delete", parents=[common], help="deletion of a line from a free arrangement")
    p.add_argument("input")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--line", type=int)
    g.add_argument("--all-lines", action="store_true")
    g.add_argument("--point-star", type=int, metavar="P", help="remove every line through lattice point P")
    p.add_argument("--exponents", help="parent exponents d1,d2")
    p.add_argument("--assume-free", action="store_true", help="trust --exponents instead of recomputing")
    p.add_argument("--verify", action="store_true", help="also classify each deletion directly")
    p.set_defaults(func=cmd_delete)

    p = sub.add_parser("catalog", parents=[common], help="embedded reference arrangements")
    p.add_argument("action", choices=["list", "show", "screen"])
    p.add_argument("name", nargs="?")
    p.add_argument("--confirm", action="store_true", help="run syzygies on entries with coordinates")
    p.add_argument("--coordinates", metavar="DIR", help="directory of <name>.arr coordinate files")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", parents=[common], help="run every available cross-check")
    p.add_argument("input")
    p.set_defaults(func=cmd_verify)
    return parser


def _render(rep: dict, as_json: bool) -> str:
    if as_json:
        return to_json(rep)
    table = rep.pop("table", None)
    text = to_text(rep)
    return text + ("\n\n" + table if table else "")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        rep = args.func(args)
    except ConsistencyError as exc:
        print(f"pogarr: consistency failure: {exc.message}", file=sys.stderr)
        print(json.dumps({"evidence": exc.evidence}, default=str, indent=2), file=sys.stderr)
        return EXIT_INCONSISTENT
    except (UsageError, *_INVALID) as exc:
        print(f"pogarr: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(_render(rep, args.json))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
