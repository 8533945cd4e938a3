import random

import pytest
from hypothesis import given, strategies as st

from unramified import (
    DensePoly,
    NotMonic,
    ResidueInt,
    ZeroDivisorPivot,
    ext_euclid,
    minpoly_from_sequence,
    modcomp,
    pdivrem_monic,
    pmul,
    power_projection,
    resultant,
)
from unramified import polyring as P
from unramified.oracle import sylvester_resultant

SMALL = [(p, N) for p in (2, 3, 5, 7) for N in (1, 2, 3)]


@st.composite
def ring(draw):
    return draw(st.sampled_from(SMALL))


def coeff_lists(m, min_size=0, max_size=20):
    return st.lists(st.integers(0, m - 1), min_size=min_size, max_size=max_size)


@st.composite
def poly_pair(draw, max_size=40):
    p, N = draw(ring())
    m = p**N
    return p, N, draw(coeff_lists(m, max_size=max_size)), draw(coeff_lists(m, max_size=max_size))


@st.composite
def monic(draw, m, min_deg=1, max_deg=12):
    d = draw(st.integers(min_deg, max_deg))
    return draw(coeff_lists(m, d, d)) + [1]


def horner_compose(f, g, h, m):
    # independent reference: Horner with schoolbook products and long division
    acc = []
    for c in reversed(f):
        acc = P.normalize(P.mul_schoolbook(acc, g, m)) if acc else []
        acc = P.padd(acc, [c % m], m)
        acc = P.divrem_monic_schoolbook(acc, h, m)[1]
    return acc


def test_small_products():
    f = DensePoly([1, 1], 5, 2)
    assert pmul(f, f).coeffs == (1, 2, 1)
    assert pmul(f, DensePoly([], 5, 2)).is_zero()


def test_division_edge_cases():
    phi = DensePoly([1, 1, 1], 5, 2)
    q, r = pdivrem_monic(DensePoly([3, 4], 5, 2), phi)
    assert q.is_zero() and r.coeffs == (3, 4)
    q, r = pdivrem_monic(phi, phi)
    assert q.coeffs == (1,) and r.is_zero()
    with pytest.raises(NotMonic):
        pdivrem_monic(phi, DensePoly([1, 2], 5, 2))


def test_modcomp_identity_outer():
    phi = DensePoly([1, 1, 1], 5, 2)
    g = DensePoly([7, 3, 2], 5, 2)
    assert modcomp(DensePoly([0, 1], 5, 2), g, phi) == pdivrem_monic(g, phi)[1]
    with pytest.raises(NotMonic):
        modcomp(g, g, DensePoly([1, 2], 5, 2))


def test_power_projection_trivial_cases():
    phi = DensePoly([1, 1, 1], 5, 2)
    x = DensePoly([0, 1], 5, 2)
    assert [int(v) for v in power_projection([0, 0], x, phi, 5)] == [0] * 5
    assert [int(v) for v in power_projection([1, 0], DensePoly([], 5, 2), phi, 4)] == [1, 0, 0, 0]
    with pytest.raises(ValueError):
        power_projection([1], x, phi, 4)
    with pytest.raises(ValueError):
        power_projection([1, 0], x, phi, 0)


def test_minpoly_from_sequence_conventions():
    seq = [ResidueInt(3, 5, 2)] * 4
    assert minpoly_from_sequence(seq).coeffs == (24, 1)
    assert minpoly_from_sequence([ResidueInt(0, 5, 2)] * 4).coeffs == (1,)


def test_minpoly_from_sequence_zero_divisor_pivot():
    # over Z/25 the descent on (5, 1, ...) meets the non-unit pivot 5
    with pytest.raises(ZeroDivisorPivot):
        minpoly_from_sequence([ResidueInt(v, 5, 2) for v in (0, 5, 0, 0)])


def test_ext_euclid_trivial_cases():
    f = DensePoly([2, 0, 1], 5, 1)
    zero = DensePoly([], 5, 1)
    r, (s, t) = ext_euclid(f, zero)
    assert r == f and s.coeffs == (1,) and t.is_zero()
    r, (s, t) = ext_euclid(f, f)
    assert r == f and s.is_zero() and t.coeffs == (1,)


def test_resultant_with_constant():
    phi = DensePoly([1, 1, 1], 5, 2)
    assert int(resultant(phi, DensePoly([1], 5, 2))) == 1
    assert int(resultant(phi, DensePoly([3], 5, 2))) == 9


def test_zero_polynomial_degree():
    assert DensePoly([], 5, 2).degree == float("-inf")
    assert DensePoly([0, 0, 0], 5, 2).degree == float("-inf")
    assert DensePoly([1, 0, 25], 5, 2).degree == 0


@pytest.mark.parametrize("m", [5, 5**4, 2**31 - 1, 3**40, (2**31 - 1) ** 8])
def test_fast_product_matches_schoolbook_seeded(m):
    rng = random.Random(m)
    for _ in range(10**4 // 4):
        a = [rng.randrange(m) for _ in range(rng.randrange(1, 30))]
        b = [rng.randrange(m) for _ in range(rng.randrange(1, 30))]
        assert P.mul_kronecker(a, b, m) == P.mul_schoolbook(a, b, m)


def test_gmp_paths_match_schoolbook():
    rng = random.Random(1)
    m = (2**31 - 1) ** 64
    a = [rng.randrange(m) for _ in range(300)]
    b = [rng.randrange(m) for _ in range(300)]
    assert P.mul_full(a, b, m) == P.mul_schoolbook(a, b, m)


@given(poly_pair())
def test_fast_product_matches_schoolbook(case):
    p, N, a, b = case
    m = p**N
    assert P.normalize(P.mul_kronecker(a, b, m)) == P.normalize(P.mul_schoolbook(a, b, m))


@given(st.data())
def test_divrem_reconstruction(data):
    p, N = data.draw(ring())
    m = p**N
    h = data.draw(monic(m, max_deg=40))
    f = data.draw(coeff_lists(m, max_size=120))
    q, r = P.MonicModulus(h, m).divrem(f)
    assert len(r) < len(h)
    assert P.padd(P.pmul_list(q, h, m), r, m) == P.normalize([c % m for c in f])
    assert (q, r) == P.divrem_monic_schoolbook(f, h, m)


@given(st.data())
def test_modcomp_matches_horner(data):
    p, N = data.draw(ring())
    m = p**N
    h = data.draw(monic(m, max_deg=16))
    f = data.draw(coeff_lists(m, max_size=17))
    g = data.draw(coeff_lists(m, max_size=len(h) - 1))
    got = modcomp(DensePoly(f, p, N), DensePoly(g, p, N), DensePoly(h, p, N))
    assert list(got.coeffs) == horner_compose(f, g, h, m)


@given(st.data())
def test_power_projection_fast_matches_reference(data):
    p, N = data.draw(ring())
    m = p**N
    h = data.draw(monic(m, max_deg=20))
    d = len(h) - 1
    g = data.draw(coeff_lists(m, max_size=d))
    proj = data.draw(coeff_lists(m, d, d))
    count = data.draw(st.integers(1, 3 * d + 2))
    args = (proj, DensePoly(g, p, N), DensePoly(h, p, N), count)
    assert power_projection(*args, method="bsgs") == power_projection(*args, method="naive")


@given(st.data())
def test_transposed_product_is_dual_of_mulmod(data):
    p, N = data.draw(ring())
    m = p**N
    h = data.draw(monic(m, max_deg=20))
    d = len(h) - 1
    mod = P.MonicModulus(h, m)
    ell = data.draw(coeff_lists(m, d, d))
    G = data.draw(coeff_lists(m, max_size=d))
    a = data.draw(coeff_lists(m, max_size=d))
    lhs = sum(x * y for x, y in zip(P.tmulmod(ell, G, mod), a + [0] * d)) % m
    rhs = sum(x * y for x, y in zip(ell, mod.mulmod(a, G))) % m
    assert lhs == rhs


@given(st.data())
def test_resultant_matches_sylvester(data):
    p, N = data.draw(ring())
    m = p**N
    f = data.draw(monic(m, max_deg=6))
    g = data.draw(coeff_lists(m, max_size=7))
    got = int(resultant(DensePoly(f, p, N), DensePoly(g, p, N)))
    assert got == sylvester_resultant(f, g, m)


@given(st.data())
def test_ext_euclid_bezout(data):
    p, N = data.draw(ring())
    m = p**N
    f = data.draw(coeff_lists(m, max_size=10))
    g = data.draw(coeff_lists(m, max_size=10))
    F, G = DensePoly(f, p, N), DensePoly(g, p, N)
    try:
        r, (s, t) = ext_euclid(F, G)
    except ZeroDivisorPivot:
        assert N > 1
        return
    assert s * F + t * G == r


@given(st.data())
def test_minpoly_from_sequence_annihilates(data):
    # sequence s_i = <proj, g^i mod h> over F_p: its minimal recurrence kills it
    p = data.draw(st.sampled_from([2, 3, 5, 7]))
    h = data.draw(monic(p, max_deg=8))
    d = len(h) - 1
    g = data.draw(coeff_lists(p, max_size=d))
    proj = data.draw(coeff_lists(p, d, d))
    seq = power_projection(proj, DensePoly(g, p, 1), DensePoly(h, p, 1), 2 * d)
    c = list(minpoly_from_sequence(seq).coeffs)
    assert c[-1] == 1 and len(c) - 1 <= d
    vals = [int(v) for v in seq]
    k = len(c) - 1
    for i in range(len(vals) - k):
        assert sum(c[j] * vals[i + j] for j in range(k + 1)) % p == 0


@given(st.data())
def test_irreducibility_test_matches_trial_division(data):
    from unramified.oracle import irreducible_brute_force

    p = data.draw(st.sampled_from([2, 3, 5]))
    f = data.draw(monic(p, max_deg=6))
    assert P.is_irreducible_mod_p(f, p) == irreducible_brute_force(f, p)
