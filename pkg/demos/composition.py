"""Modular composition, power projection, and timing as precision doubles."""

import time

from unramified import DensePoly, modcomp, new_context, power_projection, random_element, random_inert_polynomial

phi = DensePoly([1, 1, 1], 5, 2)
f = DensePoly([0, 0, 1], 5, 2)
g = DensePoly([1, 1], 5, 2)
print("(x+1)^2 mod phi        =", modcomp(f, g, phi))
seq = power_projection([1, 0], DensePoly([0, 1], 5, 2), phi, 6)
print("<e0, x^i mod phi>      =", [int(s) for s in seq])

p, n = 2**31 - 1, 64
print(f"\nmultiplication time, p = 2^31-1, n = {n}")
prev = None
for N in (4, 8, 16, 32, 64):
    ctx = new_context(p, n, N, random_inert_polynomial(p, n, N, seed=0))
    a, b = random_element(ctx, 1), random_element(ctx, 2)
    a * b
    reps = 20
    t0 = time.perf_counter()
    for _ in range(reps):
        a * b
    dt = (time.perf_counter() - t0) / reps
    ratio = "" if prev is None else f"  x{dt / prev:.2f}"
    print(f"  N = {N:2d}: {1e6 * dt:8.1f} us{ratio}")
    prev = dt
