"""Artin-Schreier type equations and Teichmuller lifts."""

from unramified import (
    FrobPolynomial,
    frob_element,
    gen_newton_lift,
    new_context,
    solve_artin_schreier,
    teichmuller_lift,
)

ctx = new_context(5, 2, 2, [1, 1, 1])
alpha, beta = ctx.one(), ctx.one() * 5
gamma = ctx.element([1, 21])
X = solve_artin_schreier(alpha, beta, gamma)
print("solution of sigma(X) + 5X + (1 + 21x) = 0:", X)
print("residual:", alpha * frob_element(X) + beta * X + gamma)

# Teichmuller lifts: the unique roots of unity (or zero) above each residue class
z = new_context(5, 1, 4, [620, 1])
for r in range(1, 5):
    T = teichmuller_lift(z.element([r]))
    print(f"teich({r}) mod 5^4 = {int(T.coeffs[0]):4d}, T^4 = {(T**4).coeffs[0]}")

# the same lift through the generalised Newton iteration on Y^p - Z
print("via Newton on Y^5 - Z:", gen_newton_lift(FrobPolynomial.teichmuller(5), z.element([2])))

# in a larger ring every Teichmuller lift is fixed by the p^n-th power map
big = new_context(7, 5, 20, [4, 1, 0, 0, 0, 1])
T = teichmuller_lift(big.element([3, 1, 4, 1, 5]))
print("\nT^(7^5) == T in (7, 5, 20):", T ** (7**5) == T)
