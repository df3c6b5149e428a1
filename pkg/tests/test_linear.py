from fractions import Fraction

from hypothesis import given, strategies as st

from arithmetree import FormalSum, LinComb, TensorComb, bilinear

keys = st.sampled_from("abcde")
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
combs = st.dictionaries(keys, coeffs, max_size=5).map(LinComb)
scalars = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@given(combs, combs, combs)
def test_addition_is_an_abelian_group(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x + LinComb() == x
    assert x - x == 0
    assert -(-x) == x


@given(combs, combs, scalars, scalars)
def test_scalar_laws(x, y, a, b):
    assert a * (x + y) == a * x + a * y
    assert (a + b) * x == a * x + b * x
    assert (a * b) * x == a * (b * x)
    assert 1 * x == x


def test_zero_coefficients_vanish():
    x = LinComb({"a": 1, "b": 0}) + LinComb({"a": -1})
    assert x.is_zero() and not x and x == 0
    assert len(LinComb({"a": 0})) == 0


def test_repeated_keys_add_up():
    assert LinComb.of("aab") == LinComb({"a": 2, "b": 1})


def test_formatting():
    assert LinComb({"a": 1, "b": -1, "c": Fraction(1, 2)}).format() == "a - b + 1/2*c"
    assert LinComb({"a": -2}).format() == "-2*a"
    assert LinComb().format() == "0"


def test_json():
    assert LinComb({"b": 3, "a": Fraction(-1, 3)}).to_json() == [
        {"coefficient": "-1/3", "basis": "a"},
        {"coefficient": "3", "basis": "b"},
    ]


def test_subclasses_are_preserved():
    s = FormalSum.basis("a") + FormalSum.basis("b")
    assert type(s) is FormalSum
    assert type(-s) is FormalSum
    t = TensorComb({("a", "b"): 1, ("b", "b"): 2})
    assert t.swap() == TensorComb({("b", "a"): 1, ("b", "b"): 2})
    assert type(t.swap()) is TensorComb


def test_hash_and_equality():
    assert hash(LinComb({"a": 1})) == hash(LinComb({"a": Fraction(1)}))
    assert {LinComb({"a": 1}), LinComb({"a": 1})} == {LinComb({"a": 1})}


@given(combs, combs, combs)
def test_bilinear_extension(x, y, z):
    def concat(a, b):
        return LinComb.basis(a + b)
    assert bilinear(x + y, z, concat) == bilinear(x, z, concat) + bilinear(y, z, concat)
    assert bilinear(z, x + y, concat) == bilinear(z, x, concat) + bilinear(z, y, concat)


@given(combs)
def test_flat_map_is_linear(x):
    f = lambda k: LinComb({k: 2, "z": 1})
    assert x.flat_map(f) == sum((c * f(k) for k, c in x.items()), LinComb())
