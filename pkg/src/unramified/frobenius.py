"""Frobenius sigma and its powers on the generator x and on arbitrary elements.

Over F_p the images x^(p^(2^j)) form a ladder built by self-composition;
any x^(p^k) is then a composition along the binary digits of k.  The
p-adic image sigma^k(x) is the root of phi lifting x^(p^k) mod p, and
sigma^k(a(x)) = a(sigma^k(x)) mod phi.  Results are memoised on the
full-precision context.
"""

from dataclasses import dataclass

from . import polyring as P
from .newton import NewtonProblem, lift_root

__all__ = ["FrobImage", "frob_generator_mod_p", "frob_generator_lifted", "frob_element"]


@dataclass(frozen=True)
class FrobImage:
    k: int
    image: P.DensePoly
    precision: int


def _check_k(ctx, k):
    if not 0 <= k < ctx.n:
        raise ValueError(f"Frobenius power {k} outside [0, {ctx.n})")


def _ladder_mod_p(ctx, j):
    """x^(p^(2^j)) mod phi-bar as a list."""
    root = ctx.root
    fld = root.residue_field()

    def compute():
        if j == 0:
            return fld.mod.powmod([0, 1], root.p)
        prev = _ladder_mod_p(root, j - 1)
        return P.compose_list(prev, prev, fld.mod)

    return root.memo(("ladder", j), compute)


def _image_mod_p(ctx, k):
    root = ctx.root
    if k == 0:
        return [0, 1] if root.n > 1 else root.residue_field().mod.reduce([0, 1])

    def compute():
        fld = root.residue_field()
        result, j = None, 0
        while k >> j:
            if (k >> j) & 1:
                step = _ladder_mod_p(root, j)
                result = step if result is None else P.compose_list(result, step, fld.mod)
            j += 1
        return result

    return root.memo(("modp", k), compute)


def frob_generator_mod_p(ctx, k):
    """x^(p^k) mod (phi, p)."""
    _check_k(ctx, k)
    return FrobImage(k, P.DensePoly._raw(_image_mod_p(ctx, k), ctx.p, 1), 1)


def _image_lifted(ctx, k):
    root = ctx.root
    if k == 0:
        img = root.mod.reduce([0, 1])
    else:
        def compute():
            y0 = root.residue_field()._wrap(_image_mod_p(root, k))
            return lift_root(NewtonProblem(list(root.phi), y0, root.N)).trimmed()

        img = root.memo(("lifted", k), compute)
    if ctx is root:
        return img
    m = ctx.modulus
    return P.normalize([c % m for c in img])


def frob_generator_lifted(ctx, k):
    """sigma^k(x) at the context's precision: the root of phi lifting x^(p^k)."""
    _check_k(ctx, k)
    return FrobImage(k, P.DensePoly._raw(_image_lifted(ctx, k), ctx.p, ctx.N), ctx.N)


def frob_element(a, k=1):
    """sigma^k(a).  ``k`` is taken mod n (negative k gives sigma^(-k) = sigma^(n-k))."""
    ctx = a.ctx
    k %= ctx.n
    if k == 0:
        return a
    img = _image_lifted(ctx, k)
    return ctx._wrap(P.compose_list(a.trimmed(), img, ctx.mod))
