"""Minimal polynomial, trace, norm and Teichmuller modulus over Z_p mod p^N.

The minimal polynomial is obtained from 2n projections P(alpha^i) and a
Euclidean descent.  Over Z/p^N the descent can fail (non-unit pivot) or
return a polynomial that kills alpha without being canonical when the
reduction of alpha generates a smaller field than alpha does.  A candidate
is therefore accepted only if it kills alpha and either has degree n (the
descent then certifies a non-singular Hankel system mod p) or is
irreducible mod p.  Otherwise one random projection is tried, and finally
the product over the Frobenius orbit of alpha is expanded directly.
Both routes agree whenever the fast one is accepted.
"""

import random

from . import polyring as P
from .context import RingContext
from .errors import InternalInconsistency, ZeroDivisorPivot
from .frobenius import frob_element
from .semilinear import teichmuller_lift
from .zmod import ResidueInt

__all__ = [
    "default_projection",
    "minimal_polynomial",
    "orbit_polynomial",
    "trace",
    "norm",
    "norm_resultant",
    "teichmuller_modulus",
    "is_teichmuller_modulus",
]


def default_projection(n):
    """The functional P(1) = 1, P(x^i) = 0 for 0 < i < n."""
    return [1] + [0] * (n - 1)


def _projection_candidate(alpha, proj):
    ctx = alpha.ctx
    n, p = ctx.n, ctx.p
    a = alpha.trimmed()
    seq = P.power_projection_bsgs(proj, a, ctx.mod, 2 * n)
    try:
        c = P.minpoly_sequence_list(seq, p, ctx.N)
    except ZeroDivisorPivot:
        return None
    if P.compose_list(c, a, ctx.mod):
        return None
    if len(c) - 1 == n or P.is_irreducible_mod_p(c, p):
        return c
    return None


def _poly_mul_elements(f, g):
    out = [None] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            t = x * y
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    return out


def _product_tree(factors):
    while len(factors) > 1:
        nxt = [_poly_mul_elements(factors[i], factors[i + 1]) for i in range(0, len(factors) - 1, 2)]
        if len(factors) % 2:
            nxt.append(factors[-1])
        factors = nxt
    return factors[0]


def orbit_polynomial(alpha):
    """prod over the distinct sigma^i(alpha) of (X - sigma^i(alpha)), as a list."""
    ctx = alpha.ctx
    orbit = [alpha]
    cur = frob_element(alpha, 1)
    while cur != alpha:
        orbit.append(cur)
        cur = frob_element(cur, 1)
    one = ctx.one()
    poly = _product_tree([[-c, one] for c in orbit])
    if not all(c.is_constant() for c in poly):
        raise InternalInconsistency("orbit polynomial has non-constant coefficients")
    return P.normalize([c.coeffs[0] for c in poly])


def _minpoly_list(alpha):
    ctx = alpha.ctx
    c = _projection_candidate(alpha, default_projection(ctx.n))
    if c is None:
        rng = random.Random(repr((ctx.p, ctx.n, ctx.N, alpha.coeffs)))
        c = _projection_candidate(alpha, [rng.randrange(ctx.modulus) for _ in range(ctx.n)])
    if c is None:
        c = orbit_polynomial(alpha)
    return c


def minimal_polynomial(alpha, cross_check=False):
    """Monic c over Z/p^N of least degree d (d | n) with c(alpha) = 0.

    Equals the product of (X - conjugate) over the Frobenius orbit of alpha.
    With ``cross_check`` the orbit product is also computed and compared.
    """
    ctx = alpha.ctx
    c = _minpoly_list(alpha)
    if cross_check and c != orbit_polynomial(alpha):
        raise InternalInconsistency("projection and orbit minimal polynomials disagree")
    return P.DensePoly._raw(c, ctx.p, ctx.N)


def trace(alpha):
    ctx = alpha.ctx
    c = _minpoly_list(alpha)
    d = len(c) - 1
    return ResidueInt(-(ctx.n // d) * c[d - 1], ctx.p, ctx.N)


def norm(alpha):
    ctx = alpha.ctx
    c = _minpoly_list(alpha)
    d = len(c) - 1
    c0 = c[0] if c else 0
    return ResidueInt(pow((-1) ** d * c0, ctx.n // d, ctx.modulus), ctx.p, ctx.N)


def norm_resultant(alpha):
    """Norm as Res_X(phi(X), alpha(X))."""
    ctx = alpha.ctx
    return P.resultant(ctx.phi_poly(), alpha.residue)


def is_teichmuller_modulus(F, p, N):
    """Check X^(p^n) = X mod (F, p^N), composing X^p-images along the ladder."""
    coeffs = list(F.coeffs) if isinstance(F, P.DensePoly) else list(F)
    mod = P.MonicModulus(coeffs, p**N)
    base = mod.powmod([0, 1], p)
    return P.xpow_ladder(mod, p, mod.d, base) == mod.reduce([0, 1])


def teichmuller_modulus(ctx):
    """Minimal polynomial F of the Teichmuller lift of x; F = phi mod p and
    F divides X^(p^n) - X modulo p^N."""
    T = teichmuller_lift(ctx.gen())
    F = minimal_polynomial(T)
    if not is_teichmuller_modulus(F, ctx.p, ctx.N):
        raise InternalInconsistency("Teichmuller modulus failed the X^(p^n) = X check")
    return F


def teichmuller_context(ctx):
    """The same ring presented by its Teichmuller modulus."""
    return RingContext(ctx.p, ctx.n, ctx.N, teichmuller_modulus(ctx))
