"""Rebuild the Klein arrangement from its reflection group and compare it with
the shipped ``klein.arr``.

The 3-dimensional representation of PSL(2,7) is written over Q(zeta_7).  Each
of its 21 involutions fixes a line pointwise; that line is the Klein mirror.
A projective frame on four of the mirrors moves every coefficient into the
quadratic subfield Q(sqrt -7) = Q[a]/(a^2 + a + 2), with sqrt(-7) = 2a + 1.

    python3 demos/klein_from_group.py [--write OUT.arr]
"""

import itertools
import sys
from fractions import Fraction

from pogarr import Arrangement, ProjectiveLine, klein
from pogarr.exactfield import extension
from pogarr.formats import format_arrangement

Z = extension([1, 1, 1, 1, 1, 1, 1])  # Q(zeta_7)
zeta = Z.gen()
zp = [zeta**i for i in range(7)]
ZERO, ONE = Z(0), Z(1)
I3 = [[Z(int(i == j)) for j in range(3)] for i in range(3)]


def mul(A, B):
    return [[sum((A[i][l] * B[l][j] for l in range(3)), ZERO) for j in range(3)] for i in range(3)]


def key(A):
    return tuple(x._v for row in A for x in row)


def generators():
    s7 = zp[1] + zp[2] + zp[4] - zp[3] - zp[5] - zp[6]  # Gauss sum, s7^2 = -7
    a, b, c = zp[1] - zp[6], zp[2] - zp[5], zp[4] - zp[3]
    k = -1 / s7
    R = [[k * a, k * b, k * c], [k * b, k * c, k * a], [k * c, k * a, k * b]]
    S = [[zp[4], ZERO, ZERO], [ZERO, zp[2], ZERO], [ZERO, ZERO, zp[1]]]
    T = [[ZERO, ONE, ZERO], [ZERO, ZERO, ONE], [ONE, ZERO, ZERO]]
    return R, S, T


def group(gens):
    seen = {key(I3): I3}
    frontier = [I3]
    while frontier:
        new = []
        for A in frontier:
            for g in gens:
                B = mul(A, g)
                if key(B) not in seen:
                    seen[key(B)] = B
                    new.append(B)
        frontier = new
    return list(seen.values())


def canon(v):
    piv = next(x for x in v if not x.is_zero())
    return [x / piv for x in v]


def mirror(g):
    # the -1 eigenspace of g is a plane, so g + I has rank one and any
    # nonzero row of it is the equation of the mirror
    M = [[g[i][j] + I3[i][j] for j in range(3)] for i in range(3)]
    return canon(next(r for r in M if any(not x.is_zero() for x in r)))


def det3(L):
    return (
        L[0][0] * (L[1][1] * L[2][2] - L[1][2] * L[2][1])
        - L[0][1] * (L[1][0] * L[2][2] - L[1][2] * L[2][0])
        + L[0][2] * (L[1][0] * L[2][1] - L[1][1] * L[2][0])
    )


def inv3(L):
    d = det3(L)
    C = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            m = [[L[r][c] for c in range(3) if c != j] for r in range(3) if r != i]
            C[j][i] = (-1) ** (i + j) * (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d
    return C


def vecmul(v, A):
    return [sum((v[l] * A[l][j] for l in range(3)), ZERO) for j in range(3)]


def in_quadratic_subfield(x):
    # fixed by zeta -> zeta^2, the index-2 subgroup of the Galois group
    moved = sum((c * zp[(2 * i) % 7] for i, c in enumerate(x.coefficients)), ZERO)
    return moved == x


def frame_change(lines):
    """Send four mirrors to the standard frame; keep the first choice landing in Q(sqrt -7)."""
    for q in itertools.combinations(range(len(lines)), 4):
        L = [lines[i] for i in q[:3]]
        if det3(L).is_zero():
            continue
        Li = inv3(L)
        w = vecmul(lines[q[3]], Li)
        if any(x.is_zero() for x in w):
            continue
        B = [[Li[i][j] / w[j] for j in range(3)] for i in range(3)]
        new = [canon(vecmul(l, B)) for l in lines]
        if all(in_quadratic_subfield(x) for l in new for x in l):
            return q, new
    raise RuntimeError("no rational frame found")


K = extension([2, 1, 1])  # a^2 + a + 2
a = K.gen()


def to_quadratic(x):
    # x = u + v * sqrt(-7) with sqrt(-7) = zeta + zeta^2 + zeta^4 - (zeta^3 + zeta^5 + zeta^6)
    c = x.coefficients
    v = Fraction(c[1]) / 2
    u = Fraction(c[0]) - v
    return K(u) + K(v) * (2 * a + 1)


def main(argv):
    gens = generators()
    G = group(gens)
    print(f"group generated by R, S, T has order {len(G)}")
    invs = [g for g in G if key(mul(g, g)) == key(I3) and key(g) != key(I3)]
    print(f"involutions: {len(invs)}")
    mirrors = [mirror(g) for g in invs]
    assert len({tuple(x._v for x in m) for m in mirrors}) == 21
    q, framed = frame_change(mirrors)
    print(f"frame on mirrors {q} puts every coefficient in Q(sqrt -7)")
    arr = Arrangement([ProjectiveLine(tuple(to_quadratic(x) for x in l)) for l in framed])
    print(f"weak combinatorics {arr.weak}")
    shipped = klein()
    same = {l.key() for l in arr.lines} == {l.key() for l in shipped.lines}
    print("matches the shipped klein.arr:", same)
    if "--write" in argv:
        out = argv[argv.index("--write") + 1]
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(format_arrangement(arr, ["Klein arrangement rebuilt from the group of order 168"]))
        print(f"wrote {out}")
    return 0 if same else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
