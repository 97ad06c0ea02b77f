import pytest

from pogarr.arrangement import delete_line
from pogarr.exactfield import rationals
from pogarr.linalg import ExactBackend, ModularBackend, PythonBackend, default_primes
from pogarr.poly import HomogeneousPoly
from pogarr.syzygy import (
    ConsistencyError,
    SyzygyError,
    SyzygyModule,
    ar_dimension,
    classify,
    defining_polynomial,
    generator_degrees,
    jacobian,
    mdr,
    tau_from_milnor,
)

from conftest import pencil, rational_arrangement
from oracle import ar_exponents_oracle, derivation_dimension

Q = rationals()
x, y, z = (HomogeneousPoly.linear(c) for c in [(Q(1), Q(0), Q(0)), (Q(0), Q(1), Q(0)), (Q(0), Q(0), Q(1))])
GENERIC4 = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))


def test_defining_polynomials(triangle, hesse):
    assert defining_polynomial(triangle) == x * y * z
    two = rational_arrangement((1, 0, 0), (0, 1, 0), (1, 1, 0))
    assert defining_polynomial(two) == x * x * y + x * y * y
    K = hesse.field
    w = K.gen()
    xk, yk, zk = (HomogeneousPoly.linear(c) for c in [(K(1), K(0), K(0)), (K(0), K(1), K(0)), (K(0), K(0), K(1))])

    def cube_diff(a, b):
        return a * a * a + (b * b * b).scale(K(-1))

    expected = cube_diff(xk, yk) * cube_diff(yk, zk) * cube_diff(zk, xk)
    assert defining_polynomial(hesse) == expected.monic()


def test_jacobian():
    assert jacobian(x * y * z) == (y * z, x * z, x * y)
    fx, fy, fz = jacobian(x * x * x)
    assert fx == (x * x).scale(Q(3)) and fy.is_zero() and fz.is_zero()


def test_euler_relation_over_a_prime_field():
    from pogarr.exactfield import prime_field
    from pogarr.arrangement import ProjectiveLine, build_lattice

    F = prime_field(101)
    arr = build_lattice([ProjectiveLine.from_values(F, *c) for c in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3), (1, 5, 7)]])
    f = defining_polynomial(arr)
    fx, fy, fz = jacobian(f)
    assert x.field != F
    X, Y, Z = (HomogeneousPoly.linear(c) for c in [(F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1))])
    assert X * fx + Y * fy + Z * fz == f.scale(F(f.degree))


def test_ar_dimension_examples(triangle, hesse):
    assert ar_dimension(defining_polynomial(triangle), 1) == 2
    assert ar_dimension(defining_polynomial(rational_arrangement(*GENERIC4)), 1) == 0
    f = defining_polynomial(hesse)
    assert ar_dimension(f, 3) == 0 and ar_dimension(f, 4) == 2


def test_mdr_examples(triangle, hesse, klein_arr):
    assert mdr(defining_polynomial(triangle)) == 1
    assert mdr(defining_polynomial(hesse)) == 4
    k2 = delete_line(klein_arr, 0)
    assert mdr(defining_polynomial(k2), backend=ModularBackend(k2.field, *default_primes(k2.field, 1)[0])) == 9


def test_generator_degrees_small(triangle):
    assert generator_degrees(defining_polynomial(triangle)) == [1, 1]
    for d in range(3, 8):
        assert generator_degrees(defining_polynomial(pencil(d)), early=False) == [0, d - 1]


def test_classify_examples(hesse, klein_arr):
    p = classify(klein_arr)
    assert (p.classification, p.exponents, p.tau) == ("Free", (9, 11), 301)
    p = classify(delete_line(hesse, 0))
    assert (p.classification, p.exponents, p.tau, p.defect) == ("NearlyFree", (4, 4, 4), 36, 1)


def test_classify_needs_three_lines(triangle):
    with pytest.raises(SyzygyError):
        classify(delete_line(triangle, 0))


def test_tau_from_milnor(triangle, hesse):
    assert tau_from_milnor(defining_polynomial(triangle), 3) == (3, True)
    p4 = rational_arrangement((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0))
    for k in (6, 7):
        assert tau_from_milnor(defining_polynomial(p4), k) == (9, True)
    f = defining_polynomial(hesse)
    be = ModularBackend(hesse.field, *default_primes(hesse.field, 1)[0])
    assert tau_from_milnor(f, 21, backend=be) == (48, True)
    # below 3(d-2) the value is flagged; here it is just dim S_5
    assert tau_from_milnor(f, 5) == (21, False)


def test_shifted_dimension_bounds(hesse):
    mod = SyzygyModule(defining_polynomial(hesse), ExactBackend(hesse.field))
    for k in range(4, 8):
        assert mod.shifted_dimension(k + 1) <= min(mod.dimension(k + 1), 3 * mod.dimension(k))


@pytest.mark.parametrize(
    "coeffs",
    [
        GENERIC4,
        GENERIC4 + ((1, 2, 3),),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, -1, 0), (1, 1, 1)),
    ],
    ids=["generic4", "generic5", "braid-like", "mixed"],
)
def test_python_backend_matches_flint(coeffs):
    f = defining_polynomial(rational_arrangement(*coeffs))
    a, b = SyzygyModule(f, ExactBackend(Q)), SyzygyModule(f, PythonBackend(Q))
    for k in range(0, f.degree - 1):
        assert a.dimension(k) == b.dimension(k)
        assert a.new_generators(k) == b.new_generators(k)


def test_python_backend_over_an_extension(hesse):
    f = defining_polynomial(delete_line(hesse, 0))
    a, b = SyzygyModule(f, ExactBackend(hesse.field)), SyzygyModule(f, PythonBackend(hesse.field))
    for k in range(3, 6):
        assert a.dimension(k) == b.dimension(k)


def test_syzygy_vectors_are_relations(hesse):
    # python backend returns field vectors; check a f_x + b f_y + c f_z = 0
    f = defining_polynomial(hesse)
    mod = SyzygyModule(f, PythonBackend(hesse.field))
    from pogarr.poly import monomials

    mons = monomials(4)
    fx, fy, fz = jacobian(f)
    K = hesse.field
    for v in mod.basis(4):
        parts = [HomogeneousPoly(K, 4, {m: v[s * len(mons) + i] for i, m in enumerate(mons) if not v[s * len(mons) + i].is_zero()}) for s in range(3)]
        assert (parts[0] * fx + parts[1] * fy + parts[2] * fz).is_zero()


@pytest.mark.parametrize(
    "coeffs",
    [
        GENERIC4,
        ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, -1, 0)),
    ],
)
def test_derivation_module_dimensions(coeffs):
    arr = rational_arrangement(*coeffs)
    f = defining_polynomial(arr)
    for k in range(0, arr.d):
        # D(A)_k = E * S_{k-1} + AR(f)_k
        assert derivation_dimension(arr.lines, k) == ar_dimension(f, k) + (k * (k + 1) // 2)


def test_generator_degrees_match_derivation_oracle():
    arrs = [
        rational_arrangement(*GENERIC4),
        rational_arrangement((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1)),
        rational_arrangement((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, -1, 0), (1, 0, -1)),
        pencil(5),
    ]
    for arr in arrs:
        assert generator_degrees(defining_polynomial(arr), early=False) == ar_exponents_oracle(arr)


def test_consistency_error_carries_evidence():
    err = ConsistencyError("boom", {"mdr": 3})
    assert err.message == "boom" and err.evidence == {"mdr": 3}


@pytest.mark.parametrize("d", range(4, 9))
def test_pencils_agree_across_modes(d):
    arr = pencil(d)
    assert classify(arr).key() == classify(arr, mode="modular").key()
    assert classify(arr).exponents == (0, d - 1)


def test_hesse_agrees_across_modes(hesse):
    exact, modular = classify(hesse), classify(hesse, mode="modular")
    assert exact.key() == modular.key()
    assert len(modular.primes) == 3 and all(p > 2**61 for p in modular.primes)
