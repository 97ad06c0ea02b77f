"""Exact invariants of projective line arrangements: freeness, plus-one generation and MPOG screening."""

from .arrangement import (
    Arrangement,
    ArrangementError,
    IntersectionPoint,
    ProjectiveLine,
    WeakCombinatorics,
    build_lattice,
    delete_line,
    delete_point_star,
    deleted_weak,
    line_profile,
    weak_combinatorics,
)
from .catalog import CatalogEntry, CatalogError, dual_hesse, embedded_entries, get_entry, ingest, klein, screen_catalog
from .combinatorics import (
    CriterionError,
    defect,
    free_tau,
    h_range,
    identity_check_thm33,
    mpog_quadratic_screen,
    naive_count_check,
    non_pog_screen,
    poincare_poly,
    pog_tau_identity,
    split_over_rationals,
    tjurina,
)
from .deletion import DeletionAnalysis, DichotomyError, analyze_deletion, deletion_dichotomy, deletion_screen
from .exactfield import FieldDescriptor, FieldError, FieldScalar, extension, prime_field, rationals
from .formats import ParseError, format_arrangement, parse_arrangement, read_arrangement
from .syzygy import (
    ConsistencyError,
    ResolutionProfile,
    SyzygyModule,
    ar_dimension,
    classify,
    defining_polynomial,
    generator_degrees,
    mdr,
    tau_from_milnor,
)

__version__ = "0.1.0"
