from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pogarr.exactfield import FieldError, check_root, extension, parse_scalar, prime_field, rationals
from pogarr.linalg import default_primes

Q = rationals()
K3 = extension([3, 0, 1])  # a^2 + 3
F7, F101 = prime_field(7), prime_field(101)


def test_rational_sum():
    assert Q(Fraction(1, 2)) + Q(Fraction(1, 3)) == Q(Fraction(5, 6))


def test_extension_product_reduces():
    a = K3.gen()
    assert a * a == K3(-3)


def test_prime_sum_wraps():
    assert F101(100) + F101(2) == F101(1)


def test_inverses():
    assert Q(Fraction(2, 3)).inverse() == Q(Fraction(3, 2))
    a = K3.gen()
    assert a.inverse() == a * Fraction(-1, 3)
    assert F7(3).inverse() == F7(5)


@pytest.mark.parametrize("field", [Q, K3, F7])
def test_zero_has_no_inverse(field):
    with pytest.raises(FieldError, match="division by zero"):
        field.zero().inverse()


def test_zero_divisor_reports_factor():
    # x^2 - 1 = (x - 1)(x + 1), so a - 1 is a zero divisor
    R = extension([-1, 0, 1])
    with pytest.raises(FieldError, match="reducible modulus witness"):
        (R.gen() - 1).inverse()


def test_field_mismatch():
    with pytest.raises(FieldError, match="field mismatch"):
        Q(1) + F7(1)
    with pytest.raises(FieldError, match="field mismatch"):
        K3.gen() * extension([1, 1, 1]).gen()


def test_specialization_examples():
    a = K3.gen()
    check_root(K3, 7, 2)
    assert (a + 1).specialize_mod_p(7, 2) == F7(3)
    assert Q(Fraction(1, 2)).specialize_mod_p(7) == F7(4)
    assert (a * a).specialize_mod_p(7, 2) == F7(4)


def test_specialization_errors():
    with pytest.raises(FieldError):
        check_root(K3, 7, 3)
    with pytest.raises(FieldError, match="bad prime"):
        Q(Fraction(1, 7)).specialize_mod_p(7)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        extension([1, 2])  # degree 1
    with pytest.raises(ValueError):
        extension([1, 0, 2])  # not monic
    with pytest.raises(ValueError):
        prime_field(9)


def test_scalar_syntax_round_trip():
    for f, tok in [(Q, "-3/4"), (K3, "[1/2,-5]"), (F7, "6")]:
        assert str(parse_scalar(f, tok)) == tok
    assert parse_scalar(Q, "6/8") == Q(Fraction(3, 4))


def test_canonical_representation():
    x = K3([Fraction(2, 4), Fraction(-6, 3)])
    y = K3([Fraction(1, 2), -2])
    assert x == y and hash(x) == hash(y) and x._v == y._v
    assert Q(Fraction(-2, -4))._v.denominator == 2


# ---- randomized field axioms -------------------------------------------

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
CUBIC = extension([-2, 0, 0, 1])  # a^3 - 2, irreducible
FIELDS = {"Q": Q, "K3": K3, "cubic": CUBIC, "F101": F101}


def element(name):
    f = FIELDS[name]
    if f.kind == "prime":
        return st.integers(0, 100).map(f)
    return st.lists(fractions, min_size=f.degree, max_size=f.degree).map(f) if f.degree > 1 else fractions.map(f)


@pytest.mark.parametrize("name", list(FIELDS))
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_field_axioms(name, data):
    x, y, z = (data.draw(element(name)) for _ in range(3))
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == FIELDS[name].zero()
    if not x.is_zero():
        assert x * x.inverse() == FIELDS[name].one()
        assert (y / x) * x == y


@settings(max_examples=40, deadline=None)
@given(x=st.lists(fractions, min_size=3, max_size=3), y=st.lists(fractions, min_size=3, max_size=3))
def test_specialization_is_a_homomorphism(x, y):
    x, y = CUBIC(x), CUBIC(y)
    for p, root in default_primes(CUBIC, 3, start=10**6):
        sx, sy = x.specialize_mod_p(p, root), y.specialize_mod_p(p, root)
        assert (x * y).specialize_mod_p(p, root) == sx * sy
        assert (x + y).specialize_mod_p(p, root) == sx + sy
