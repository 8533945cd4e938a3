"""Minimal polynomials, traces, norms and Teichmuller moduli."""

import gmpy2

from unramified import (
    frob_element,
    minimal_polynomial,
    new_context,
    norm,
    norm_resultant,
    random_inert_polynomial,
    teichmuller_modulus,
    trace,
)

ctx = new_context(5, 2, 2, [1, 1, 1])
a = ctx.element([3, 7])
print("minpoly(3 + 7x) =", minimal_polynomial(a))
print("Tr =", trace(a), " N =", norm(a), " Res(phi, a) =", norm_resultant(a))
print("a + sigma(a) =", a + frob_element(a), " a * sigma(a) =", a * frob_element(a))

# norm of a constant c is c^n; check with gmpy2
big = new_context(11, 7, 30, random_inert_polynomial(11, 7, 30, seed=2))
c = 123456789
print("\nN(c) == c^7 mod 11^30:", int(norm(big.one() * c)) == int(gmpy2.powmod(c, 7, big.modulus)))

# a Teichmuller modulus divides X^(p^n) - X, so x is its own Teichmuller lift
F = teichmuller_modulus(ctx)
print("\nTeichmuller modulus for phi = X^2 + X + 1 over Z/25:", F)
ctx3 = new_context(3, 3, 4, [1, 2, 0, 1])
print("Teichmuller modulus for X^3 + 2X + 1 over Z/81:   ", teichmuller_modulus(ctx3))
