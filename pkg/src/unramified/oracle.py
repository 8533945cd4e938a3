"""Slow reference implementations used to cross-check the fast modules.

Nothing here calls into polyring, arith, frobenius, semilinear or charpoly:
reduction, powering, inversion and conjugation are re-derived from scratch
with schoolbook loops, square-and-multiply and exhaustive search.
Elements are plain tuples of n integers.
"""

import itertools

from .errors import InstanceTooLarge, NonUnit

__all__ = [
    "NaiveRing",
    "sylvester_resultant",
    "minpoly_fp",
    "irreducible_brute_force",
    "EXHAUSTIVE_LIMIT",
]

EXHAUSTIVE_LIMIT = 10**4


class NaiveRing:
    """(Z/p^N)[x]/phi with schoolbook everything."""

    def __init__(self, p, n, N, phi):
        self.p, self.n, self.N = p, n, N
        self.m = p**N
        self.phi = tuple(c % self.m for c in phi)
        self._conj = {}

    @classmethod
    def from_context(cls, ctx):
        return cls(ctx.p, ctx.n, ctx.N, ctx.phi)

    @property
    def size(self):
        return self.m**self.n

    # basic arithmetic

    def reduce(self, coeffs):
        r = [c % self.m for c in coeffs]
        n = self.n
        while len(r) > n:
            top = r.pop()
            base = len(r) - n
            for i in range(n):
                r[base + i] = (r[base + i] - top * self.phi[i]) % self.m
        return tuple(r + [0] * (n - len(r)))

    def add(self, a, b):
        return tuple((x + y) % self.m for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.m for x, y in zip(a, b))

    def const(self, c):
        return tuple([c % self.m] + [0] * (self.n - 1))

    def naive_mul(self, a, b):
        prod = [0] * (2 * self.n - 1)
        for i in range(self.n):
            for j in range(self.n):
                prod[i + j] += a[i] * b[j]
        return self.reduce(prod)

    def naive_pow(self, a, e):
        result = self.const(1)
        while e:
            if e & 1:
                result = self.naive_mul(result, a)
            a = self.naive_mul(a, a)
            e >>= 1
        return result

    def is_unit(self, a):
        return any(c % self.p for c in a)

    def unit_group_order(self):
        return (self.p**self.n - 1) * self.p ** (self.n * (self.N - 1))

    def naive_inv(self, a):
        """a^(|units| - 1)."""
        if not self.is_unit(a):
            raise NonUnit("not a unit")
        return self.naive_pow(a, self.unit_group_order() - 1)

    def horner(self, coeffs, y):
        """Evaluate a polynomial with ring-element coefficients at y."""
        acc = self.const(0)
        for c in reversed(coeffs):
            acc = self.add(self.naive_mul(acc, y), c)
        return acc

    def elements(self):
        if self.size > EXHAUSTIVE_LIMIT:
            raise InstanceTooLarge(f"{self.size} elements")
        for t in itertools.product(range(self.m), repeat=self.n):
            yield t

    # Frobenius

    def gen(self):
        return self.reduce([0, 1])

    def conjugate_of_x(self, k):
        """sigma^k(x): start from x^(p^k) (right mod p) and contract onto the
        nearby root of phi with r <- r - phi(r)/phi'(r_0), N rounds."""
        k %= self.n
        if k not in self._conj:
            phi = [self.const(c) for c in self.phi]
            dphi = [self.const(i * c) for i, c in enumerate(self.phi)][1:]
            r = self.naive_pow(self.gen(), self.p**k)
            u = self.naive_inv(self.horner(dphi, r))
            for _ in range(self.N):
                r = self.sub(r, self.naive_mul(self.horner(phi, r), u))
            self._conj[k] = r
        return self._conj[k]

    def naive_frob(self, a, k):
        """sigma^k(a) = sum a_i * sigma^k(x)^i."""
        k %= self.n
        key = ("powers", k)
        if key not in self._conj:
            img, pw = self.conjugate_of_x(k), [self.const(1)]
            for _ in range(self.n - 1):
                pw.append(self.naive_mul(pw[-1], img))
            self._conj[key] = pw
        acc = [0] * self.n
        for c, v in zip(a, self._conj[key]):
            if c:
                for i in range(self.n):
                    acc[i] += c * v[i]
        return tuple(x % self.m for x in acc)

    # Frobenius equations

    def naive_solutions_as(self, alpha, beta, gamma):
        """All X with alpha*sigma(X) + beta*X + gamma = 0 (exhaustive)."""
        out = []
        for X in self.elements():
            lhs = self.add(self.add(self.naive_mul(alpha, self.naive_frob(X, 1)), self.naive_mul(beta, X)), gamma)
            if not any(lhs):
                out.append(X)
        return out

    def naive_solve_as(self, alpha, beta, gamma, exhaustive=None):
        """Exhaustive search when the ring is small (or ``exhaustive`` is
        True), otherwise fixed-point iteration."""
        if exhaustive is None:
            exhaustive = self.size <= EXHAUSTIVE_LIMIT
        if exhaustive:
            sols = self.naive_solutions_as(alpha, beta, gamma)
            if len(sols) != 1:
                raise ValueError(f"{len(sols)} solutions")
            return sols[0]
        # X <- sigma^{-1}(-(beta X + gamma)/alpha) gains a digit per round.
        ainv = self.naive_inv(alpha)
        X = self.const(0)
        for _ in range(self.N):
            t = self.naive_mul(self.sub(self.const(0), self.add(self.naive_mul(beta, X), gamma)), ainv)
            X = self.naive_frob(t, self.n - 1)
        return X

    def naive_teich_lifts(self, a):
        """All T = a mod p with T^(p^n) = T (exhaustive over the lifts of a)."""
        q = self.p**self.n
        count = self.p ** (self.n * (self.N - 1))
        if count > EXHAUSTIVE_LIMIT:
            raise InstanceTooLarge(f"{count} lifts")
        base = [c % self.p for c in a]
        out = []
        for digits in itertools.product(range(self.m // self.p), repeat=self.n):
            T = tuple(b + self.p * d for b, d in zip(base, digits))
            if self.naive_pow(T, q) == T:
                out.append(T)
        return out

    def naive_teich(self, a, exhaustive=None):
        if exhaustive is None:
            exhaustive = self.p ** (self.n * (self.N - 1)) <= EXHAUSTIVE_LIMIT
        if exhaustive:
            lifts = self.naive_teich_lifts(a)
            if len(lifts) != 1:
                raise ValueError(f"{len(lifts)} Teichmuller lifts")
            return lifts[0]
        T = tuple(c % self.m for c in a)
        for _ in range(self.N):
            T = self.naive_pow(T, self.p**self.n)
        return T

    # minimal polynomial, trace, norm

    def conjugates(self, a):
        return [self.naive_frob(a, k) for k in range(self.n)]

    def naive_minpoly(self, a):
        """prod (X - c) over the distinct conjugates of a, as an integer list."""
        orbit = []
        for c in self.conjugates(a):
            if c == a and orbit:
                break
            orbit.append(c)
        poly = [self.const(1)]
        for c in orbit:
            shifted = [self.const(0)] + poly
            scaled = [self.naive_mul(c, t) for t in poly] + [self.const(0)]
            poly = [self.sub(s, t) for s, t in zip(shifted, scaled)]
        if any(any(t[1:]) for t in poly):
            raise ArithmeticError("orbit polynomial is not over Z_p")
        return [t[0] for t in poly]

    def naive_trace(self, a):
        acc = self.const(0)
        for c in self.conjugates(a):
            acc = self.add(acc, c)
        return acc[0]

    def naive_norm(self, a):
        acc = self.const(1)
        for c in self.conjugates(a):
            acc = self.naive_mul(acc, c)
        return acc[0]

    def naive_roots(self, coeffs, y0):
        """All roots y = y0 mod p of a polynomial with ring-element coefficients."""
        out = []
        for y in self.elements():
            if all((u - v) % self.p == 0 for u, v in zip(y, y0)) and not any(self.horner(coeffs, y)):
                out.append(y)
        return out


def _bareiss_det(M):
    M = [list(r) for r in M]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def sylvester_resultant(f, g, m):
    """det of the Sylvester matrix of integer lists f, g, reduced mod m."""
    while f and f[-1] % m == 0:
        f = f[:-1]
    while g and g[-1] % m == 0:
        g = g[:-1]
    a, b = len(f) - 1, len(g) - 1
    if a < 0 or b < 0:
        return 0
    size = a + b
    if size == 0:
        return 1
    rows = []
    for i in range(b):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(a):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(rows) % m


def minpoly_fp(ring1, a):
    """Minimal polynomial over F_p of an element of an N=1 NaiveRing, found as
    the first linear dependency among 1, a, a^2, ... (Gaussian elimination)."""
    p, n = ring1.p, ring1.n
    basis = []  # rows: (vector, combination) in echelon form keyed by pivot
    power = ring1.const(1)
    for d in range(n + 1):
        vec = [c % p for c in power]
        comb = [0] * d + [1]
        for pivot, bvec, bcomb in basis:
            f = vec[pivot]
            if f:
                vec = [(x - f * y) % p for x, y in zip(vec, bvec)]
                comb = [(x - f * y) % p for x, y in itertools.zip_longest(comb, bcomb, fillvalue=0)]
        nz = [i for i, v in enumerate(vec) if v]
        if not nz:
            return comb
        pivot = nz[0]
        inv = pow(vec[pivot], -1, p)
        basis.append((pivot, [v * inv % p for v in vec], [c * inv % p for c in comb]))
        power = ring1.naive_mul(power, a)
    raise AssertionError("no dependency among n+1 powers")


def irreducible_brute_force(f, p):
    """Trial division by every monic polynomial of degree 1..deg/2 over F_p."""
    f = [c % p for c in f]
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = list(low) + [1]
            r = list(f)
            while len(r) - 1 >= d:
                c = r[-1]
                for i in range(d + 1):
                    r[len(r) - 1 - d + i] = (r[len(r) - 1 - d + i] - c * g[i]) % p
                r.pop()
            if not any(r):
                return False
    return n >= 1
