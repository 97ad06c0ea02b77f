"""Jacobian syzygies of line arrangements by exact linear algebra.

For f of degree d, the degree-k piece of AR(f) is the kernel of

    (S_k)^3 -> S_{k+d-1},   (a, b, c) |-> a f_x + b f_y + c f_z,

a matrix with 3 C(k+2, 2) columns and C(k+d+1, 2) rows.  Minimal generators
in degree k are counted as dim AR(f)_k - dim S_1 AR(f)_{k-1}, which gives the
exponents (d_1, ..., d_m) without a Groebner basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .arrangement import Arrangement
from .combinatorics import (
    defect as defect_formula,
    free_tau,
    identity_check_thm33,
    mpog_quadratic_screen,
    pog_tau_identity,
    tjurina,
)
from .exactfield import FieldDescriptor
from .linalg import ExactBackend, ModularBackend, PythonBackend, default_primes, prime_with_root
from .poly import HomogeneousPoly, monomial_index, monomials

__all__ = [
    "ConsistencyError",
    "SyzygyError",
    "ResolutionProfile",
    "defining_polynomial",
    "jacobian",
    "jacobian_columns",
    "SyzygyModule",
    "ar_dimension",
    "mdr",
    "generator_degrees",
    "classify",
    "tau_from_milnor",
    "make_backends",
]

log = logging.getLogger(__name__)

VARS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


class SyzygyError(RuntimeError):
    pass


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; ``evidence`` holds everything computed."""

    def __init__(self, message: str, evidence: dict):
        super().__init__(f"{message}; evidence: {evidence}")
        self.message = message
        self.evidence = evidence


def defining_polynomial(arr: Arrangement) -> HomogeneousPoly:
    """Product of the line forms, scaled so the grlex-leading coefficient is 1."""
    f = None
    for line in arr.lines:
        lf = HomogeneousPoly.linear(line.coefficients)
        f = lf if f is None else f * lf
    if f is None:
        raise SyzygyError("empty arrangement")
    return f.monic()


def jacobian(f: HomogeneousPoly) -> tuple[HomogeneousPoly, HomogeneousPoly, HomogeneousPoly]:
    if f.degree < 1:
        raise SyzygyError("jacobian needs degree >= 1")
    return tuple(f.derivative(v) for v in range(3))


def jacobian_columns(jac, k: int):
    """Sparse columns of the degree-k Jacobian map; column = slot * N_k + monomial."""
    n = jac[0].degree + k
    rindex = monomial_index(n)
    cols = []
    for g in jac:
        items = list(g.terms.items())
        for m in monomials(k):
            col = {}
            for e, c in items:
                col[rindex[(e[0] + m[0], e[1] + m[1], e[2] + m[2])]] = c
            cols.append(col)
    return len(rindex), len(cols), cols


class SyzygyModule:
    """Graded pieces of AR(f) computed on demand with one backend, cached per degree."""

    def __init__(self, f: HomogeneousPoly, backend):
        self.f = f
        self.d = f.degree
        self.jac = jacobian(f)
        self.backend = backend
        self._prepared = backend.prepare(self.jac) if hasattr(backend, "prepare") else None
        self._basis: dict[int, list] = {}
        self._shifted: dict[int, int] = {}

    def basis(self, k: int) -> list:
        if k not in self._basis:
            if k < 0:
                self._basis[k] = []
            elif self._prepared is not None:
                self._basis[k] = self.backend.jacobian_nullspace(self._prepared, k)
            else:
                n_rows, n_cols, cols = jacobian_columns(self.jac, k)
                self._basis[k] = self.backend.nullspace(n_rows, n_cols, cols)
        return self._basis[k]

    def dimension(self, k: int) -> int:
        return len(self.basis(k)) // self.backend.scale

    def shifted_dimension(self, k: int) -> int:
        """dim of S_1 * AR(f)_{k-1} inside (S_k)^3."""
        if k in self._shifted:
            return self._shifted[k]
        prev = self.basis(k - 1)
        if not prev:
            self._shifted[k] = 0
            return 0
        s = self.backend.scale
        src, dst = monomials(k - 1), monomial_index(k)
        n_src, n_dst = len(src), len(dst)
        zero = prev[0][0] * 0
        remap = []
        for var in VARS:
            table = []
            for slot in range(3):
                for m in src:
                    table.append(slot * n_dst + dst[(m[0] + var[0], m[1] + var[1], m[2] + var[2])])
            remap.append(table)
        vectors = []
        width = 3 * n_dst * s
        for v in prev:
            for table in remap:
                w = [zero] * width
                for c, target in enumerate(table):
                    base, tbase = c * s, target * s
                    for j in range(s):
                        w[tbase + j] = v[base + j]
                vectors.append(w)
        r = self.backend.rank(vectors, width) // s
        self._shifted[k] = r
        return r

    def new_generators(self, k: int) -> int:
        return self.dimension(k) - self.shifted_dimension(k)


def _backend(f: FieldDescriptor, backend):
    if backend is None:
        return ExactBackend(f)
    if isinstance(backend, str):
        if backend == "exact":
            return ExactBackend(f)
        if backend == "python":
            return PythonBackend(f)
        raise ValueError(f"unknown backend {backend!r}")
    return backend


def ar_dimension(f: HomogeneousPoly, k: int, backend=None) -> int:
    """dim_K AR(f)_k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return SyzygyModule(f, _backend(f.field, backend)).dimension(k)


def _cap(d: int, first: int) -> int:
    # a pencil (mdr 0) has exponents (0, d-1); otherwise d_m <= d-2
    return d - 1 if first == 0 else d - 2


def mdr(f: HomogeneousPoly, backend=None, module: SyzygyModule | None = None) -> int:
    """Minimal degree of a Jacobian syzygy, searched upward from degree 0."""
    mod = module or SyzygyModule(f, _backend(f.field, backend))
    d = f.degree
    for k in range(0, max(d - 2, 0) + 1):
        if mod.dimension(k):
            return k
    raise SyzygyError(f"no syzygy <= d-2 = {d - 2}: input is not a reduced line arrangement")


def _certified(exps: list[int], d: int, tau: int | None) -> str | None:
    if tau is None:
        return None
    if len(exps) == 2 and exps[0] + exps[1] == d - 1 and tau == free_tau(d, exps[0]):
        return "free"
    if len(exps) == 3 and exps[0] + exps[1] == d:
        if tau == (d - 1) ** 2 - exps[0] * (d - exps[0] - 1) - (exps[2] - exps[1] + 1):
            return "pog"
    return None


def generator_degrees(
    f: HomogeneousPoly,
    backend=None,
    tau: int | None = None,
    early: bool = True,
    module: SyzygyModule | None = None,
) -> list[int]:
    """Sorted degrees of a minimal generating set of AR(f).

    With ``early`` and the Tjurina number ``tau`` supplied, the sweep stops as
    soon as the degrees found certify a free or plus-one generated curve;
    otherwise every degree up to d-2 (d-1 for a pencil) is examined.
    """
    mod = module or SyzygyModule(f, _backend(f.field, backend))
    d = f.degree
    first = mdr(f, module=mod)
    exps: list[int] = []
    for k in range(first, _cap(d, first) + 1):
        exps += [k] * mod.new_generators(k)
        if early and _certified(exps, d, tau):
            break
    return exps


def tau_from_milnor(f: HomogeneousPoly, k: int | None = None, backend=None) -> tuple[int, bool]:
    """dim M(f)_k = dim S_k - rank of the Jacobian map into S_k.

    Returns ``(value, stable)``; ``stable`` is False below degree 3(d-2),
    where the value is only a probe.
    """
    d = f.degree
    threshold = 3 * (d - 2)
    if k is None:
        k = threshold
    j = k - d + 1
    size = comb(k + 2, 2)
    if j < 0:
        return size, k >= threshold
    mod = SyzygyModule(f, _backend(f.field, backend))
    rank = 3 * comb(j + 2, 2) - mod.dimension(j)
    stable = k >= threshold
    if not stable:
        log.warning("tau_from_milnor at degree %d below stabilization %d: probe only", k, threshold)
    return size - rank, stable


@dataclass
class ResolutionProfile:
    d: int
    mdr: int
    exponents: tuple[int, ...]
    tau: int
    defect: int | None
    classification: str
    mode: str
    primes: tuple[int, ...] = ()
    certificate: str | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def m(self) -> int:
        return len(self.exponents)

    def key(self) -> tuple:
        """Everything except the verification mode, for cross-mode comparison."""
        return (self.d, self.mdr, self.exponents, self.tau, self.defect, self.classification)

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "mdr": self.mdr,
            "exponents": list(self.exponents),
            "tau": self.tau,
            "defect": self.defect,
            "classification": self.classification,
            "mode": self.mode,
            "primes": [str(p) for p in self.primes],
            "certificate": self.certificate,
            "warnings": list(self.warnings),
        }


def _classification(exps: list[int], d: int) -> str:
    m = len(exps)
    if m == 2:
        return "Free"
    if m == 3 and exps[0] + exps[1] == d:
        if exps[2] == exps[1]:
            return "NearlyFree"
        if exps[2] == exps[1] + 1:
            return "MPOG"
        return "POG"
    return f"MSyzygy({m})"


def make_backends(field: FieldDescriptor, mode: str = "exact", primes=None):
    """Backends for a mode: one exact backend, or one per prime in modular mode."""
    if mode == "exact":
        return [ExactBackend(field)]
    if mode == "python":
        return [PythonBackend(field)]
    if mode == "modular":
        if field.kind == "prime":
            return [ExactBackend(field)]
        if primes:
            pairs = [prime_with_root(field, p) for p in primes]
        else:
            pairs = default_primes(field, 3)
        return [ModularBackend(field, p, r) for p, r in pairs]
    raise ValueError(f"unknown mode {mode!r}")


def classify(arr: Arrangement, mode: str = "exact", primes=None, early: bool = True) -> ResolutionProfile:
    """Exponents, Tjurina number, defect and freeness/POG type of an arrangement.

    Raises :class:`ConsistencyError` if any identity linking these fails.
    """
    d = arr.d
    if d < 3:
        raise SyzygyError("classification needs d >= 3")
    w = arr.weak
    tau = tjurina(w)
    f = defining_polynomial(arr)
    backends = make_backends(arr.field, mode, primes)
    results = []
    for be in backends:
        mod = SyzygyModule(f, be)
        first = mdr(f, module=mod)
        exps = generator_degrees(f, tau=tau, early=early, module=mod)
        results.append((be, first, exps))
    if len({(r[1], tuple(r[2])) for r in results}) != 1:
        raise ConsistencyError(
            "modular results disagree across primes",
            {be.label: {"mdr": first, "exponents": exps} for be, first, exps in results},
        )
    _, first, exps = results[0]
    labels = [be.label for be in backends]
    if mode == "modular" and arr.field.kind != "prime":
        mode_label = f"modular({len(backends)} primes)"
        used = tuple(be.p for be in backends)
    else:
        mode_label = "exact"
        used = ()
    cls = _classification(exps, d)
    dft = None if 2 * first > d else defect_formula(d, first, tau)
    prof = ResolutionProfile(
        d=d,
        mdr=first,
        exponents=tuple(exps),
        tau=tau,
        defect=dft,
        classification=cls,
        mode=mode_label,
        primes=used,
        certificate=_certified(exps, d, tau) if early else None,
    )
    _check_profile(prof, arr)
    log.debug("classified d=%d via %s: %s", d, labels, prof)
    return prof


def _check_profile(prof: ResolutionProfile, arr: Arrangement) -> None:
    d, exps, tau = prof.d, list(prof.exponents), prof.tau
    w = arr.weak
    evidence = prof.as_dict() | {"weak": str(w)}
    problems = []
    m = w.max_multiplicity
    lower = -((-(2 * d - 2 * m)) // m)
    if prof.mdr < lower:
        prof.warnings.append(f"mdr {prof.mdr} below the bound ceil(2d/m - 2) = {lower}")
    if exps[0] != prof.mdr:
        problems.append("smallest exponent differs from mdr")
    if prof.mdr > 0 and max(exps) > d - 2:
        problems.append("an exponent exceeds d - 2")
    cls = prof.classification
    if cls == "Free":
        if exps[0] + exps[1] != d - 1 or tau != free_tau(d, exps[0]):
            problems.append("free exponents do not satisfy d1 + d2 = d - 1 and tau = (d-1)^2 - d1 d2")
    if cls in ("NearlyFree", "MPOG", "POG"):
        d1, d2, d3 = exps
        if not pog_tau_identity(d, d1, d2, d3, tau).passed:
            problems.append("POG tau identity fails")
        if not identity_check_thm33(w, d1, d2, d3).passed:
            problems.append("sum (r-1) t_r = d1 d2 + d3 fails")
        if prof.defect != d3 - d2 + 1:
            problems.append("defect differs from d3 - d2 + 1")
    if prof.defect is not None:
        if (prof.defect == 0) != (cls == "Free"):
            problems.append("free exactly when defect 0 fails")
        if (prof.defect == 1) != (cls == "NearlyFree"):
            problems.append("nearly free exactly when defect 1 fails")
    if 2 * prof.mdr <= d:
        r = prof.mdr
        on_quadric = r * r - r * (d - 1) + (d - 1) ** 2 == tau + 2
        if on_quadric != (cls == "MPOG"):
            problems.append("MPOG criterion r^2 - r(d-1) + (d-1)^2 = tau + 2 disagrees")
        if cls == "MPOG" and r not in mpog_quadratic_screen(d, tau):
            problems.append("mdr is not a root of the MPOG quadratic")
    if problems:
        raise ConsistencyError("; ".join(problems), evidence)
