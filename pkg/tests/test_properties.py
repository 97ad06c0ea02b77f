"""Lattice invariants on hypothesis-generated rational arrangements."""

from hypothesis import HealthCheck, assume, given, settings, strategies as st

from pogarr import ProjectiveLine, build_lattice, rationals
from pogarr.arrangement import delete_line, deleted_weak, line_profile, specialize_arrangement
from pogarr.combinatorics import naive_count_check, sum_r_minus_one, tjurina

Q = rationals()
BIG_PRIME = 2**61 - 1

coeff = st.integers(-4, 4)
triple = st.tuples(coeff, coeff, coeff).filter(any)


def _arrangement(triples):
    seen, lines = set(), []
    for t in triples:
        line = ProjectiveLine.from_values(Q, *t)
        if line.key() not in seen:
            seen.add(line.key())
            lines.append(line)
    assume(len(lines) >= 3)
    return build_lattice(lines)


arrangements = st.lists(triple, min_size=3, max_size=9).map(_arrangement)
settings.register_profile("lattice", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])


@settings(settings.get_profile("lattice"))
@given(arrangements)
def test_pairs_meet_once(arr):
    arr.check_lattice()
    assert naive_count_check(arr.weak).passed


@settings(settings.get_profile("lattice"))
@given(arrangements)
def test_tjurina_identity(arr):
    d = arr.d
    assert tjurina(arr.weak) == sum((r - 1) ** 2 * t for r, t in arr.weak.counts)
    assert tjurina(arr.weak) == d * d - d - sum_r_minus_one(arr.weak)


@settings(settings.get_profile("lattice"))
@given(arrangements)
def test_line_profiles(arr):
    # every other line meets line i in exactly one lattice point
    for i in range(arr.d):
        prof = line_profile(arr, i)
        assert sum((r - 1) * n for r, n in prof.items()) == arr.d - 1


@settings(settings.get_profile("lattice"))
@given(arrangements, st.data())
def test_deletion_update_matches_lattice(arr, data):
    assume(arr.d >= 4)
    i = data.draw(st.integers(0, arr.d - 1))
    assert deleted_weak(arr.weak, line_profile(arr, i)) == delete_line(arr, i).weak


@settings(settings.get_profile("lattice"))
@given(arrangements)
def test_reduction_mod_large_prime(arr):
    assert specialize_arrangement(arr, BIG_PRIME).weak.counts == arr.weak.counts
