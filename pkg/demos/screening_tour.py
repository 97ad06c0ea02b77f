"""Combinatorial screening, no coordinates needed.

Everything here is integer arithmetic on weak combinatorics (d; t2, t3, ...):
Tjurina numbers, the Poincare-type quadratics 1 + d t + (sum (r-1) t_r - h) t^2,
and the quadratic that an MPOG arrangement's first exponent must satisfy.

    python3 demos/screening_tour.py
"""

from pogarr import WeakCombinatorics, h_range, mpog_quadratic_screen, non_pog_screen, poincare_poly, tjurina
from pogarr.catalog import WIMAN_PRINTED, get_entry, screen_catalog
from pogarr.combinatorics import naive_count_check


def show_screen(spec):
    w = WeakCombinatorics.parse(spec)
    print(f"\n{w}   tau = {tjurina(w)}")
    for h in h_range(w):
        p = poincare_poly(w, h)
        print(f"  h = {h:2d}: {p}   splits as {p.split}" if p.split else f"  h = {h:2d}: {p}")
    v = non_pog_screen(w)
    tail = "" if v.not_pog else f", candidates (h, d1, d2) = {list(v.candidates)}"
    print(f"  verdict: {v.status}{tail}")


# Five lines in general position cannot be plus-one generated.
show_screen("d=5;t2=10")

# A point-star deletion of the Klein arrangement: no h gives a rational splitting.
show_screen("d=17;t2=16,t3=24,t4=8")

# The dual Hesse deletion splits twice; the parent exponents (4,4) pick (4,4,4).
show_screen("d=8;t2=4,t3=8")

print("\nMPOG quadratic roots  d1^2 - d1 (d-1) + (d-1)^2 - tau - 2 = 0")
for d, tau in [(20, 269), (15, 145), (13, 109)]:
    print(f"  d = {d}, tau = {tau}: integer roots <= d/2 -> {mpog_quadratic_screen(d, tau)}")

print("\nA misprinted vector is caught by the pair count d(d-1) = sum r(r-1) t_r:")
chk = naive_count_check(WIMAN_PRINTED)
print(f"  {WIMAN_PRINTED}: {chk.lhs} vs {chk.rhs}, residual {chk.residual}")
print(f"  stored instead: {get_entry('Wiman').weak}")

print("\nSimplicial catalogue screen:\n")
print(screen_catalog().table())
