"""Ring arithmetic in Z_{5^2} = Z_5[x]/(x^2+x+1), then at cryptographic size."""

import time

import gmpy2

from unramified import new_context, random_element, random_inert_polynomial, reduce_mod_p

ctx = new_context(5, 2, 2, [1, 1, 1])
a, b = ctx.element([3, 7]), ctx.gen()
print("a      =", a)
print("a + x  =", a + b)
print("a * x  =", a * b)
print("1 / a  =", a.inverse())
print("a mod 5:", reduce_mod_p(a))
print("(5x) has valuation", (b * 5).valuation(), "and is a unit:", (b * 5).is_unit())

# Mersenne prime 2^31 - 1, degree 64, precision p^32
p = 2**31 - 1
assert gmpy2.is_prime(p)
n, N = 64, 32
big = new_context(p, n, N, random_inert_polynomial(p, n, N, seed=1))
u, v = random_element(big, 1), random_element(big, 2)
t0 = time.perf_counter()
w = u * v
t1 = time.perf_counter()
winv = w.inverse()
t2 = time.perf_counter()
print(f"\np = 2^31-1, n = {n}, N = {N}: modulus has {big.modulus.bit_length()} bits")
print(f"mul {1e3 * (t1 - t0):.2f} ms, inverse {1e3 * (t2 - t1):.2f} ms")
print("w * w^-1 == 1:", w * winv == big.one())
