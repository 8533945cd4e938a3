import pytest
from hypothesis import given, strategies as st

from unramified import (
    DensePoly,
    NewtonProblem,
    PreconditionFailed,
    lift_root,
    lift_root_trace,
)
from unramified.newton import doubling_ladder
from unramified.oracle import NaiveRing

from instances import evaluate, make, newton_instances


def test_doubling_ladder():
    assert doubling_ladder(1) == [1]
    assert doubling_ladder(5) == [1, 2, 4, 5]
    assert doubling_ladder(8) == [1, 2, 4, 8]


def test_linear_polynomial_returns_its_root(zp25):
    c = 17
    y = lift_root(NewtonProblem([-c % 25, 1], zp25.element([2])))
    assert y.coeffs == (17,)


def test_dense_poly_input(ctx1):
    f = DensePoly([1, 1, 1], 5, 2)
    assert lift_root(NewtonProblem(f, ctx1.element([4, 4]))).coeffs == (24, 24)


def test_preconditions(ctx1, zp25):
    with pytest.raises(PreconditionFailed):
        lift_root(NewtonProblem([1, 1, 1], ctx1.element([1, 0])))  # not a root mod 5
    with pytest.raises(PreconditionFailed):
        lift_root(NewtonProblem([4, 1, 1], zp25.element([2])))  # (X+3)^2 - 5: double root


def test_ring_coefficients(ctx1):
    # f(Y) = Y^2 - x*Y - 1 with ring coefficients; check the output is a root
    x = ctx1.gen()
    coeffs = [-ctx1.one(), -x, ctx1.one()]
    R = NaiveRing.from_context(ctx1)
    ref = [c.coeffs for c in coeffs]
    roots = [y for y in R.elements() if not any(R.horner(ref, y))]
    for y0 in roots:
        y = lift_root(NewtonProblem(coeffs, ctx1.element(y0).reduce(1).lift_to(ctx1)))
        assert y.coeffs == y0


@pytest.mark.parametrize("p,n,N", [(2, 3, 4), (3, 2, 5), (5, 4, 3), (7, 1, 6)])
def test_quadratic_convergence_trace(p, n, N):
    ctx = make(p, n, N)
    for f, y0 in newton_instances(ctx, 40, seed=p * 100 + n):
        trace = lift_root_trace(NewtonProblem(f, y0))
        assert [y.ctx.N for y in trace] == doubling_ladder(N)
        coeffs = f if not isinstance(f[0], int) else [ctx.one() * c for c in f]
        for j, y in enumerate(trace):
            v = evaluate(coeffs, y.lift_to(ctx)).valuation()
            assert v >= min(2**j, N)
        assert trace[-1].reduce(1) == y0.reduce(1)


@given(st.sampled_from([(2, 2, 3), (3, 2, 2), (5, 1, 4), (5, 2, 2), (2, 4, 2)]), st.integers(0, 10**6))
def test_matches_exhaustive_root_search(shape, seed):
    ctx = make(*shape)
    R = NaiveRing.from_context(ctx)
    f, y0 = next(newton_instances(ctx, 1, seed))
    f_el = f if not isinstance(f[0], int) else [ctx.one() * c for c in f]
    y = lift_root(NewtonProblem(f, y0))
    roots = R.naive_roots([c.coeffs for c in f_el], y0.coeffs)
    assert roots == [y.coeffs]
