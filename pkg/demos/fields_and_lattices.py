"""Exact fields, intersection lattices and modular cross-checks.

    python3 demos/fields_and_lattices.py
"""

from pogarr import ProjectiveLine, build_lattice, classify, extension, prime_field, rationals
from pogarr.arrangement import specialize_arrangement
from pogarr.catalog import dual_hesse
from pogarr.linalg import default_primes, roots_mod_p

# Q[w]/(w^2 + w + 1): w is a primitive cube root of unity
K = extension([1, 1, 1])
w = K.gen()
print(f"{K}: w^3 = {w**3}, 1/(1 - w) = {1 / (1 - w)}")

F = prime_field(101)
print(f"{F}: 1/7 = {F(7).inverse()}")

# A near pencil: five lines through one point plus one more line.
Q = rationals()
lines = [ProjectiveLine.from_values(Q, 1, i, 0) for i in range(5)] + [ProjectiveLine.from_values(Q, 0, 0, 1)]
arr = build_lattice(lines)
print(f"\nnear pencil: {arr.weak}")
for pt in arr.lattice:
    print(f"  ({', '.join(map(str, pt.coordinates))}) on lines {pt.incident_lines}")
prof = classify(arr)
print(f"  {prof.classification} {prof.exponents}")

H = dual_hesse()
print(f"\ndual Hesse over {H.field}: {H.weak}")
for p, root in default_primes(H.field, 3):
    red = specialize_arrangement(H, p, root)
    print(f"  mod {p} (w -> {root}): {build_lattice(red.lines).weak}")
print(f"  roots of w^2 + w + 1 mod 7: {roots_mod_p(H.field, 7)}")

ex, mo = classify(H, mode="exact"), classify(H, mode="modular")
print(f"\nexact:   {ex.classification} {ex.exponents} ({ex.mode})")
print(f"modular: {mo.classification} {mo.exponents} ({mo.mode}, primes {', '.join(map(str, mo.primes))})")
