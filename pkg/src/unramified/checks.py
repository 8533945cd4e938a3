"""Fast-versus-naive comparison runs shared by ``selftest`` and the test suite.

:func:`check_context` draws seeded random elements of one ring and compares
every fast operation with :mod:`unramified.oracle`.  It returns a list of
human-readable mismatch descriptions (empty when everything agrees).
"""

import itertools
import random
import time

from . import polyring as P
from .arith import reduce_mod_p
from .charpoly import minimal_polynomial, norm, norm_resultant, teichmuller_modulus, trace
from .context import new_context, random_element, random_inert_polynomial
from .frobenius import frob_element, frob_generator_lifted, frob_generator_mod_p
from .newton import NewtonProblem, lift_root
from .oracle import NaiveRing, irreducible_brute_force, minpoly_fp, sylvester_resultant
from .semilinear import solve_artin_schreier, teichmuller_lift
from .zmod import ResidueInt, zinv, zmul

__all__ = ["CORE_OPS", "check_context", "run_grid"]

CORE_OPS = ("mul", "inv", "frob", "minpoly", "trace", "norm", "norm_res", "solve_as", "teich")


def _core(ctx, R, a, b, beta, mismatches, tag):
    n = ctx.n

    def expect(name, got, want):
        if got != want:
            mismatches.append(f"{tag} {name}: got {got}, oracle {want}")

    expect("mul", (a * b).coeffs, R.naive_mul(a.coeffs, b.coeffs))
    if b.is_unit():
        expect("inv", b.inverse().coeffs, R.naive_inv(b.coeffs))
    for k in range(n):
        expect(f"frob k={k}", frob_element(a, k).coeffs, R.naive_frob(a.coeffs, k))
    expect("minpoly", list(minimal_polynomial(a).coeffs), R.naive_minpoly(a.coeffs))
    expect("trace", int(trace(a)), R.naive_trace(a.coeffs))
    want_norm = R.naive_norm(a.coeffs)
    expect("norm", int(norm(a)), want_norm)
    expect("norm_res", int(norm_resultant(a)), want_norm)
    if b.is_unit():
        X = solve_artin_schreier(b, beta, a)
        expect("solve_as", X.coeffs, R.naive_solve_as(b.coeffs, beta.coeffs, a.coeffs, exhaustive=False))
    expect("teich", teichmuller_lift(a).coeffs, R.naive_teich(a.coeffs, exhaustive=False))


def _extended(ctx, R, rng, mismatches, tag):
    """One pass over the remaining public operations."""
    p, n, N, m = ctx.p, ctx.n, ctx.N, ctx.modulus

    def expect(name, ok, detail=""):
        if not ok:
            mismatches.append(f"{tag} {name} {detail}".rstrip())

    x, y = rng.randrange(m), rng.randrange(m)
    expect("zmul", int(zmul(ResidueInt(x, p, N), ResidueInt(y, p, N))) == x * y % m)
    if x % p:
        expect("zinv", int(zinv(ResidueInt(x, p, N))) == pow(x, -1, m))

    f = [rng.randrange(m) for _ in range(rng.randrange(1, 40))]
    g = [rng.randrange(m) for _ in range(rng.randrange(1, 40))]
    expect("pmul", P.mul_full(f, g, m) == P.mul_schoolbook(f, g, m))
    phi = ctx.phi_poly()
    fp = P.DensePoly(f, p, N)
    q, r = P.pdivrem_monic(fp, phi)
    expect("pdivrem", (q * phi + r) == fp and r.degree < n)

    g_el = random_element(ctx, rng.randrange(1 << 30))
    comp = P.modcomp(fp, g_el.residue, phi)
    naive = R.horner([R.const(c) for c in f], g_el.coeffs)
    expect("modcomp", ctx.element(list(comp.coeffs)).coeffs == naive)

    proj = [rng.randrange(m) for _ in range(n)]
    fast = [int(v) for v in P.power_projection(proj, g_el.residue, phi, 2 * n)]
    ref, t = [], R.const(1)
    for _ in range(2 * n):
        ref.append(sum(u * v for u, v in zip(proj, t)) % m)
        t = R.naive_mul(t, g_el.coeffs)
    expect("power_projection", fast == ref)

    h = [rng.randrange(m) for _ in range(rng.randrange(1, 6))]
    res = int(P.resultant(phi, P.DensePoly(h, p, N)))
    expect("resultant", res == sylvester_resultant(list(ctx.phi), h, m), f"{res}")

    fld = ctx.residue_field()
    a1, b1 = [rng.randrange(p) for _ in range(n + 1)], [rng.randrange(p) for _ in range(n)]
    rr, (s, t) = P.ext_euclid(P.DensePoly(a1, p, 1), P.DensePoly(b1, p, 1))
    expect("ext_euclid", s * P.DensePoly(a1, p, 1) + t * P.DensePoly(b1, p, 1) == rr)

    expect("new_context", irreducible_brute_force(list(ctx.phi), p) or n == 1)

    a = random_element(ctx, rng.randrange(1 << 30))
    b = random_element(ctx, rng.randrange(1 << 30))
    R1 = NaiveRing(p, n, 1, ctx.phi)
    expect("reduce_mod_p", reduce_mod_p(a * b).coeffs == R1.naive_mul(reduce_mod_p(a).coeffs, reduce_mod_p(b).coeffs))
    expect("minpoly_mod_p", list(minimal_polynomial(reduce_mod_p(a)).coeffs) == minpoly_fp(R1, reduce_mod_p(a).coeffs))

    for k in range(1, n):
        img1 = list(frob_generator_mod_p(ctx, k).image.coeffs)
        expect(f"frob_mod_p k={k}", fld.element(img1).coeffs == R1.naive_pow(R1.gen(), p**k))
        lifted = ctx.element(list(frob_generator_lifted(ctx, k).image.coeffs))
        expect(f"frob_lifted k={k}", lifted.coeffs == R.conjugate_of_x(k))
        y = lift_root(NewtonProblem(list(ctx.phi), ctx.element(img1)))
        expect(f"lift_root k={k}", y.coeffs == R.conjugate_of_x(k))

    F = teichmuller_modulus(ctx)
    RF = NaiveRing(p, n, N, F.coeffs)
    ok = [c % p for c in F.coeffs] == [c % p for c in ctx.phi]
    expect("teichmod", ok and RF.naive_pow(RF.gen(), p**n) == RF.gen())


def check_context(ctx, count, seed=0, extended=False):
    """Compare ``count`` random samples of ``ctx`` against the oracle."""
    R = NaiveRing.from_context(ctx)
    mismatches = []
    for s in range(count):
        base = seed * 10**7 + s
        a = random_element(ctx, base)
        b = random_element(ctx, base + 10**6)
        beta = random_element(ctx, base + 2 * 10**6) * ctx.p
        _core(ctx, R, a, b, beta, mismatches, f"(p={ctx.p},n={ctx.n},N={ctx.N},s={s})")
    if extended:
        rng = random.Random(f"extended:{ctx.p}:{ctx.n}:{ctx.N}:{seed}")
        _extended(ctx, R, rng, mismatches, f"(p={ctx.p},n={ctx.n},N={ctx.N})")
    return mismatches


def run_grid(p_list, n_list, N_list, count, seed=0, extended=False):
    """Yield (p, n, N, mismatches, seconds) per cell."""
    for p, n, N in itertools.product(p_list, n_list, N_list):
        t0 = time.perf_counter()
        ctx = new_context(p, n, N, random_inert_polynomial(p, n, N, seed))
        bad = check_context(ctx, count, seed, extended)
        yield p, n, N, bad, time.perf_counter() - t0
