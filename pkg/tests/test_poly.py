from hypothesis import given, settings
from hypothesis import strategies as st

from dimerlab.poly import SYMBOLS, Polynomial, monomial, poly_mul, poly_pow

a, b, c, x, y, z = (Polynomial.symbol(s) for s in SYMBOLS)


def naive_square(terms):
    """Expand (sum of coeff*monomial)^2 with a plain double loop over term lists."""
    out = {}
    for m1, c1 in terms:
        for m2, c2 in terms:
            key = tuple(p + q for p, q in zip(m1, m2))
            out[key] = out.get(key, 0) + c1 * c2
    return out


def test_identity_power():
    p = a * x + b * y + c * z
    assert poly_pow(p, 1) == p
    assert poly_pow(p, 0) == Polynomial.constant(1)


def test_square_matches_naive_expansion():
    p = a * x + b * y + c * z
    terms = [(monomial(a=1, x=1), 1), (monomial(b=1, y=1), 1), (monomial(c=1, z=1), 1)]
    assert poly_pow(p, 2) == Polynomial(naive_square(terms))
    expected = (a**2 * x**2 + b**2 * y**2 + c**2 * z**2
                + 2 * a * b * x * y + 2 * a * c * x * z + 2 * b * c * y * z)
    assert poly_pow(p, 2) == expected
    assert len(poly_pow(p, 2)) == 6


def test_zero_annihilates():
    p = a * x + 3
    assert poly_mul(p, Polynomial.zero()).is_zero()
    assert (p * 0).is_zero()


def test_zero_coefficients_are_dropped():
    p = a + b - a
    assert p == b
    assert p.terms == {monomial(b=1): 1}


def test_big_coefficients_are_exact():
    p = poly_pow(Polynomial.constant(2) * x, 200)
    assert p.terms == {monomial(x=200): 2**200}


def test_json_roundtrip_and_order():
    p = 2 * a * x**2 + b + 5
    data = p.to_json()
    assert data[0] == {"coeff": "5", "exps": {}}
    assert [d["exps"] for d in data] == sorted(
        [d["exps"] for d in data], key=lambda e: tuple(e.get(s, 0) for s in SYMBOLS)
    )
    assert Polynomial.from_json(data) == p


def test_unit_symbol_is_one():
    assert Polynomial.symbol("1") == Polynomial.constant(1)
    assert str(Polynomial.zero()) == "0"


monos = st.tuples(*[st.integers(0, 2)] * 6)
polys = st.dictionaries(monos, st.integers(-5, 5), max_size=4).map(Polynomial)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q * r) == (p * q) * r
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_eval_at_one_is_multiplicative(p, q):
    assert (p * q).evaluate() == p.evaluate() * q.evaluate()


@settings(max_examples=30, deadline=None)
@given(polys, st.integers(0, 4))
def test_pow_matches_repeated_product(p, k):
    prod = Polynomial.constant(1)
    for _ in range(k):
        prod = prod * p
    assert p**k == prod
