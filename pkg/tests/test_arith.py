import random

import pytest
from hypothesis import given, strategies as st

from unramified import NonUnit, add, inv, mul, neg, new_context, power, random_element, random_inert_polynomial, reduce_mod_p, scalar_mul, sub
from unramified.oracle import NaiveRing
from unramified.zmod import ResidueInt

CONTEXTS = [(p, n, N) for p in (2, 3, 5, 7) for n in (1, 2, 3, 4) for N in (1, 2, 3, 4)]


def make(p, n, N, seed=0):
    return new_context(p, n, N, random_inert_polynomial(p, n, N, seed))


@st.composite
def elements(draw, count=2):
    ctx = make(*draw(st.sampled_from(CONTEXTS)))
    return [random_element(ctx, draw(st.integers(0, 2**32))) for _ in range(count)]


def test_identities(ctx1):
    a = ctx1.element([3, 7])
    assert add(a, ctx1.zero()) == a
    assert sub(a, a).is_zero()
    assert mul(ctx1.one(), a) == a
    assert neg(a) == ctx1.element([22, 18])
    assert scalar_mul(ResidueInt(2, 5, 2), a) == ctx1.element([6, 14])
    assert inv(ctx1.one()) == ctx1.one()
    assert power(a, 0) == ctx1.one() and power(a, 3) == a * a * a


def test_inverse_of_non_unit(ctx1):
    with pytest.raises(NonUnit):
        inv(ctx1.element([5, 10]))
    with pytest.raises(NonUnit):
        inv(ctx1.zero())


def test_reduce_mod_p_examples(ctx1):
    assert reduce_mod_p(ctx1.element([24, 24])).coeffs == (4, 4)
    assert reduce_mod_p(ctx1.zero()).coeffs == (0, 0)
    assert reduce_mod_p(ctx1.gen()).ctx.N == 1


@given(elements(3))
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a and a + b == b + a
    assert a - a == a.ctx.zero()


@given(elements(2))
def test_reduction_is_a_homomorphism(pair):
    a, b = pair
    assert reduce_mod_p(a * b) == reduce_mod_p(a) * reduce_mod_p(b)
    assert reduce_mod_p(a + b) == reduce_mod_p(a) + reduce_mod_p(b)


@pytest.mark.parametrize("p,n,N", [(2, 4, 4), (3, 3, 3), (5, 2, 4), (7, 4, 2), (5, 1, 4)])
def test_mul_and_inv_against_oracle(p, n, N):
    ctx = make(p, n, N)
    R = NaiveRing.from_context(ctx)
    units = 0
    for s in range(1000):
        a, b = random_element(ctx, s), random_element(ctx, 5000 + s)
        assert (a * b).coeffs == R.naive_mul(a.coeffs, b.coeffs)
        if b.is_unit():
            units += 1
            g = b.inverse()
            assert (g * b) == ctx.one()
            if s < 100:
                assert g.coeffs == R.naive_inv(b.coeffs)
    assert units > 500


def test_inverse_on_large_precision():
    rng = random.Random(2)
    ctx = make(2**31 - 1, 12, 40)
    for _ in range(10):
        a = random_element(ctx, rng.randrange(10**9))
        assert a * a.inverse() == ctx.one()
