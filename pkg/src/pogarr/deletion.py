"""Deleting one line from a free arrangement: free or plus-one generated.

For a free arrangement with exponents (d1, d2) and a line carrying r lattice
points, the deletion is free exactly when r >= mdr(deletion) + 1 (the epsilon
correction vanishes for lines since all their singularities are
quasi-homogeneous); otherwise it is plus-one generated with exponents
(d1, d2, d - 1 - r).  The cheap lower bound mdr >= ceil(2 d'/m' - 2) often
settles the question without any syzygy computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import Arrangement, WeakCombinatorics, delete_line, deleted_weak, line_profile
from .combinatorics import ScreenVerdict, as_weak, non_pog_screen
from .syzygy import ConsistencyError, classify, defining_polynomial, make_backends, mdr, SyzygyModule

__all__ = [
    "DichotomyError",
    "DeletionAnalysis",
    "deletion_dichotomy",
    "analyze_deletion",
    "deletion_screen",
]


class DichotomyError(ValueError):
    pass


@dataclass
class DeletionAnalysis:
    parent_exponents: tuple[int, int]
    removed_line: int | None
    restriction_count: int
    mdr_lower_bound: int
    deletion_weak: WeakCombinatorics
    verdict: str | None  # "Free", "POG" or None when undecided without coordinates
    deletion_exponents: tuple[int, ...] | None
    epsilon: int = 0
    deletion_mdr: int | None = None
    proof_trace: list[str] = field(default_factory=list)
    verified: bool = False

    @property
    def classification(self) -> str | None:
        if self.verdict == "Free":
            return "Free"
        if self.verdict == "POG":
            _, d2, d3 = self.deletion_exponents
            return "NearlyFree" if d3 == d2 else "MPOG" if d3 == d2 + 1 else "POG"
        return None

    def as_dict(self) -> dict:
        return {
            "parent_exponents": list(self.parent_exponents),
            "removed_line": self.removed_line,
            "restriction_count": self.restriction_count,
            "epsilon": self.epsilon,
            "mdr_lower_bound": self.mdr_lower_bound,
            "deletion_weak": str(self.deletion_weak),
            "deletion_mdr": self.deletion_mdr,
            "verdict": self.verdict,
            "classification": self.classification,
            "deletion_exponents": None if self.deletion_exponents is None else list(self.deletion_exponents),
            "verified": self.verified,
            "proof_trace": list(self.proof_trace),
        }


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def deletion_dichotomy(
    parent: WeakCombinatorics,
    parent_exponents: tuple[int, int],
    profile: dict[int, int],
    deletion_mdr: int | None = None,
    removed_line: int | None = None,
) -> DeletionAnalysis:
    """Decide free vs POG for a deletion from combinatorial data alone.

    ``profile`` is the removed line's multiplicity profile.  If the bound on
    mdr cannot decide and ``deletion_mdr`` is not given, the verdict is None.
    """
    d = parent.d
    if d < 4:
        raise DichotomyError("deletion analysis needs d >= 4")
    d1, d2 = sorted(parent_exponents)
    if d1 + d2 != d - 1:
        raise DichotomyError(f"dichotomy inapplicable: ({d1}, {d2}) are not free exponents for d = {d}")
    r = sum(profile.values())
    w2 = deleted_weak(parent, profile)
    m2 = w2.max_multiplicity
    bound = _ceil(Fraction(2 * (d - 1), m2) - 2)
    trace = [
        f"r = |A' cap l| = {r}",
        f"mdr(A') >= ceil(2*{d - 1}/{m2} - 2) = {bound}",
    ]
    res = DeletionAnalysis((d1, d2), removed_line, r, bound, w2, None, None, proof_trace=trace)
    if r < bound + 1:
        trace.append(f"free would need r >= mdr(A') + 1 >= {bound + 1} > {r}: not free")
        res.verdict = "POG"
        res.deletion_exponents = (d1, d2, d - 1 - r)
    elif deletion_mdr is not None:
        res.deletion_mdr = deletion_mdr
        trace.append(f"bound inconclusive; computed mdr(A') = {deletion_mdr}")
        if r >= deletion_mdr + 1:
            trace.append(f"r = {r} >= {deletion_mdr + 1}: free")
            res.verdict = "Free"
            res.deletion_exponents = (deletion_mdr, d - 2 - deletion_mdr)
        else:
            trace.append(f"r = {r} < {deletion_mdr + 1}: plus-one generated")
            res.verdict = "POG"
            res.deletion_exponents = (d1, d2, d - 1 - r)
    else:
        trace.append("bound inconclusive and no coordinates: undecided")
    if res.verdict == "POG":
        trace.append(f"exponents (d1, d2, d - 1 - r) = {res.deletion_exponents}")
    return res


def analyze_deletion(
    arr: Arrangement,
    i: int,
    parent_exponents: tuple[int, int] | None = None,
    assume_free: bool = False,
    mode: str = "exact",
    primes=None,
    verify: bool = False,
) -> DeletionAnalysis:
    """Deletion of line ``i`` from a free arrangement.

    Unless ``assume_free`` is set the parent is classified first and must be
    free.  With ``verify`` the deletion is classified too and must agree.
    """
    if arr.d < 4:
        raise DichotomyError("deletion analysis needs d >= 4")
    if not assume_free or parent_exponents is None:
        prof = classify(arr, mode=mode, primes=primes)
        if prof.classification != "Free":
            raise DichotomyError(f"dichotomy inapplicable: parent is {prof.classification}")
        if parent_exponents is not None and tuple(sorted(parent_exponents)) != prof.exponents:
            raise DichotomyError(f"parent exponents {parent_exponents} disagree with computed {prof.exponents}")
        parent_exponents = prof.exponents
    profile = line_profile(arr, i)
    res = deletion_dichotomy(arr.weak, parent_exponents, profile, removed_line=i)
    child = delete_line(arr, i)
    if res.verdict is None:
        f = defining_polynomial(child)
        values = {mdr(f, module=SyzygyModule(f, be)) for be in make_backends(child.field, mode, primes)}
        if len(values) != 1:
            raise ConsistencyError("mdr disagrees across primes", {"mdr": sorted(values)})
        res = deletion_dichotomy(arr.weak, parent_exponents, profile, deletion_mdr=values.pop(), removed_line=i)
    if child.weak != res.deletion_weak:
        raise ConsistencyError(
            "profile update disagrees with the recomputed lattice",
            {"predicted": str(res.deletion_weak), "lattice": str(child.weak)},
        )
    if verify:
        got = classify(child, mode=mode, primes=primes)
        if got.exponents != res.deletion_exponents:
            raise ConsistencyError(
                "deletion exponents disagree with the syzygy computation",
                {"predicted": res.deletion_exponents, "computed": got.exponents, "trace": res.proof_trace},
            )
        res.deletion_mdr = got.mdr
        res.verified = True
        res.proof_trace.append(f"verified by syzygy computation ({got.mode}): {got.classification} {got.exponents}")
    return res


def deletion_screen(x, parent_exponents: tuple[int, int] | None = None) -> ScreenVerdict:
    """Non-POG screen of a deletion, optionally keeping only (d1, d2) = parent exponents."""
    verdict = non_pog_screen(as_weak(x))
    if parent_exponents is None:
        return verdict
    d1, d2 = sorted(parent_exponents)
    kept = tuple(c for c in verdict.candidates if (c[1], c[2]) == (d1, d2))
    return ScreenVerdict("Candidates" if kept else "NotPOG", kept, verdict.unfiltered)
