"""Deleting lines from free arrangements.

The dual Hesse arrangement (9 lines, 12 triple points) and the Klein
arrangement (21 lines) are both free.  Removing one line leaves something that
is either free again or plus-one generated, and the lattice alone usually
decides which.

    python3 demos/deletion_tour.py [--mode exact|modular]
"""

import sys
import time

from pogarr import analyze_deletion, classify, deletion_dichotomy, delete_line, dual_hesse, klein
from pogarr.arrangement import WeakCombinatorics, delete_point_star, line_profile
from pogarr.deletion import deletion_screen

mode = sys.argv[sys.argv.index("--mode") + 1] if "--mode" in sys.argv else "exact"


def timed(label, fn):
    t0 = time.perf_counter()
    out = fn()
    print(f"  [{label}: {time.perf_counter() - t0:.2f} s]")
    return out


H = dual_hesse()
print(f"dual Hesse over {H.field}: {H.weak}")
parent = timed("classify", lambda: classify(H, mode=mode))
print(f"  {parent.classification} {parent.exponents}, tau = {parent.tau}")

res = analyze_deletion(H, 0, parent.exponents, assume_free=True, mode=mode)
print(f"\ndelete line 0: r = {res.restriction_count}, lower bound on mdr = {res.mdr_lower_bound}")
for step in res.proof_trace:
    print("   ", step)
child = timed("classify deletion", lambda: classify(delete_line(H, 0), mode=mode))
print(f"  direct computation: {child.classification} {child.exponents}, tau = {child.tau}, defect {child.defect}")

Kl = klein()
print(f"\nKlein over {Kl.field}: {Kl.weak}")
parent = timed("classify", lambda: classify(Kl, mode=mode))
print(f"  {parent.classification} {parent.exponents}, tau = {parent.tau}")
print(f"  every line carries {line_profile(Kl, 0)} (multiplicity -> points)")

verdicts = timed(
    "dichotomy for 21 lines",
    lambda: {analyze_deletion(Kl, i, parent.exponents, assume_free=True, mode=mode).classification for i in range(Kl.d)},
)
print(f"  deletions: {verdicts}")

print("\nwithout coordinates, from the weak data and parent exponents alone:")
res = deletion_dichotomy(WeakCombinatorics(21, {3: 28, 4: 21}), (9, 11), {3: 4, 4: 4})
print(f"  {res.deletion_weak}: {res.classification} {res.deletion_exponents}")

quad = next(i for i, pt in enumerate(Kl.lattice) if pt.multiplicity == 4)
star = delete_point_star(Kl, quad)
print(f"\nremoving the 4 lines through quadruple point {quad}: {star.weak}")
print(f"  screen with parent (9,11): {deletion_screen(star.weak, (9, 11)).status}")
