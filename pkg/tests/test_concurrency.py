import threading
from concurrent.futures import ThreadPoolExecutor

from unramified import frob_element, new_context, random_element, random_inert_polynomial
from unramified.oracle import NaiveRing

THREADS = 8


def fresh(p=7, n=5, N=6, seed=3):
    return new_context(p, n, N, random_inert_polynomial(p, n, N, seed))


def in_parallel(fn):
    barrier = threading.Barrier(THREADS)

    def task(i):
        barrier.wait()
        return fn(i)

    with ThreadPoolExecutor(THREADS) as pool:
        return list(pool.map(task, range(THREADS)))


def test_frobenius_on_a_fresh_context_is_thread_safe():
    ctx = fresh()
    a = random_element(ctx, 11)
    results = in_parallel(lambda i: [frob_element(a, k).coeffs for k in range(ctx.n)])
    assert all(r == results[0] for r in results)
    R = NaiveRing.from_context(ctx)
    assert results[0] == [R.naive_frob(a.coeffs, k) for k in range(ctx.n)]


def test_memo_slots_are_write_once():
    ctx = fresh(seed=4)
    got = in_parallel(lambda i: ctx.memo("probe", lambda: object()))
    assert all(g is got[0] for g in got)
    assert ctx.memo("probe", lambda: object()) is got[0]


def test_precision_children_are_shared():
    ctx = fresh(seed=5)
    got = in_parallel(lambda i: ctx.at_precision(1 + i % 3))
    for i, c in enumerate(got):
        assert c is ctx.at_precision(1 + i % 3) and c.root is ctx


def test_mixed_precision_frobenius():
    ctx = fresh(seed=6)
    a = random_element(ctx, 1)

    def work(i):
        sub = ctx.at_precision(1 + i % ctx.N)
        return sub.N, frob_element(sub.element(list(a.coeffs)), 1 + i % (ctx.n - 1)).coeffs

    got = in_parallel(work)
    for i, (M, coeffs) in enumerate(got):
        R = NaiveRing(ctx.p, ctx.n, M, ctx.phi)
        assert coeffs == R.naive_frob(tuple(c % ctx.p**M for c in a.coeffs), 1 + i % (ctx.n - 1))
