"""Ring operations on :class:`~unramified.context.UnramElement`.

Addition and multiplication are the element's own operators; this module
adds the function-style API and the inverse, which is computed in the
residue field first and then Newton-lifted up the precision ladder.
"""

from . import polyring as P
from .errors import NonUnit
from .zmod import _precision_ladder

__all__ = ["add", "sub", "neg", "scalar_mul", "mul", "inv", "power", "reduce_mod_p"]


def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def neg(a):
    return -a


def scalar_mul(c, a):
    return a * c


def mul(a, b):
    return a * b


def power(a, e):
    return a**e


def reduce_mod_p(a):
    """Image of ``a`` in the residue field F_p[x]/phi-bar."""
    return a.reduce(1)


def _field_inverse(a):
    ctx = a.ctx
    p = ctx.p
    phibar = [c % p for c in ctx.phi]
    abar = P.normalize([c % p for c in a.coeffs])
    if not abar:
        raise NonUnit("element is divisible by p", a.valuation())
    g, _, t = P.ext_euclid_list(phibar, abar, p, 1)
    # phi-bar is irreducible, so any non-zero abar is coprime to it.
    assert g == [1]
    return t


def inv(a):
    """1/a for a unit ``a``; raises NonUnit when a is 0 mod p."""
    ctx = a.ctx
    gamma = ctx.at_precision(1)._wrap(_field_inverse(a))
    for M in _precision_ladder(ctx.N)[1:]:
        sub_ctx = ctx.at_precision(M)
        g = gamma.lift_to(sub_ctx)
        gamma = g * (2 - a.reduce(M) * g)
    return gamma.lift_to(ctx) if gamma.ctx is not ctx else gamma
