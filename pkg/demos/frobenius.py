"""Frobenius conjugates: sigma lifts x -> x^p from the residue field."""

from unramified import frob_element, frob_generator_lifted, frob_generator_mod_p, new_context, reduce_mod_p
from unramified.oracle import NaiveRing

ctx = new_context(5, 2, 2, [1, 1, 1])
print("x^5 mod (phi, 5)  =", frob_generator_mod_p(ctx, 1).image)
print("sigma(x) mod 25   =", frob_generator_lifted(ctx, 1).image)

a = ctx.element([3, 7])
sa = frob_element(a)
print("sigma(3 + 7x)     =", sa)
print("sigma^2 is the identity:", frob_element(sa) == a)
print("sigma(a) = a^5 mod 5:", reduce_mod_p(sa) == reduce_mod_p(a) ** 5)

# sigma is not the 5th power once N > 1
print("a^5 in Z/25       =", a**5)
print("schoolbook oracle =", NaiveRing.from_context(ctx).naive_frob(a.coeffs, 1))

# conjugate orbit in a degree-6 extension of Z_3
big = new_context(3, 6, 10, [2, 1, 0, 0, 0, 0, 1])
y = big.element([1, 2, 0, 5])
orbit = [y]
for _ in range(5):
    orbit.append(frob_element(orbit[-1]))
print("\norbit of", y, "under sigma has", len({tuple(o.coeffs) for o in orbit}), "elements")
print("sigma^6(y) == y:", frob_element(orbit[-1]) == y)
