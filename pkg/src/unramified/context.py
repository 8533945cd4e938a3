"""The ring Z_{p^n} mod p^N, presented as (Z/p^N)[x] / phi(x).

A :class:`RingContext` is immutable apart from write-once memo tables (lower
precision copies of itself and lifted Frobenius images).  Those tables are
filled under a lock with ``setdefault`` so concurrent readers only ever see
a complete value; two threads racing may both compute it, which is harmless.
"""

import functools
import random
import threading

from . import polyring as P
from .errors import BadDegree, ContextMismatch, NotIrreducible, NotMonic
from .zmod import ResidueInt, check_prime

__all__ = [
    "RingContext",
    "UnramElement",
    "new_context",
    "element_from_coeffs",
    "random_element",
    "random_inert_polynomial",
]


class RingContext:
    """Validated (p, n, N, phi) with the reduction cache for phi."""

    __slots__ = ("p", "n", "N", "modulus", "phi", "mod", "_root", "_lock", "_children", "_memo", "__weakref__")

    def __init__(self, p, n, N, phi, *, _validated=False, _root=None):
        coeffs = list(phi.coeffs) if isinstance(phi, P.DensePoly) else [int(c) for c in phi]
        if not _validated:
            p = check_prime(p)
            if n < 1:
                raise BadDegree("extension degree n must be >= 1")
            if N < 1:
                raise BadDegree("precision N must be >= 1")
        self.p, self.n, self.N = int(p), int(n), int(N)
        self.modulus = self.p**self.N
        coeffs = P.normalize([c % self.modulus for c in coeffs])
        if not _validated:
            if len(coeffs) - 1 != self.n:
                raise BadDegree(f"phi has degree {len(coeffs) - 1}, expected {self.n}")
            if coeffs[-1] != 1:
                raise NotMonic("phi must be monic")
            if not P.is_irreducible_mod_p(coeffs, self.p):
                raise NotIrreducible("phi is not irreducible modulo p")
        self.phi = tuple(coeffs)
        self.mod = P.MonicModulus(coeffs, self.modulus)
        self._root = self if _root is None else _root
        self._lock = threading.Lock()
        self._children = {}
        self._memo = {}

    # -- precision management

    @property
    def root(self):
        """The full-precision context this one was truncated from (or itself)."""
        return self._root

    def at_precision(self, M):
        """The same ring truncated to precision p^M (M <= root precision)."""
        root = self._root
        if M == self.N:
            return self
        if not 1 <= M <= root.N:
            raise ValueError(f"precision {M} outside [1, {root.N}]")
        if M == root.N:
            return root
        ctx = root._children.get(M)
        if ctx is None:
            ctx = RingContext(root.p, root.n, M, root.phi, _validated=True, _root=root)
            with root._lock:
                ctx = root._children.setdefault(M, ctx)
        return ctx

    def residue_field(self):
        return self.at_precision(1)

    def memo(self, key, compute):
        """Write-once memoisation slot on this context."""
        value = self._memo.get(key)
        if value is None:
            value = compute()
            with self._lock:
                value = self._memo.setdefault(key, value)
        return value

    # -- element construction

    def element(self, coeffs):
        return element_from_coeffs(self, coeffs)

    def _wrap(self, coeffs):
        # coeffs: canonical list of length <= n
        return UnramElement._raw(self, tuple(coeffs) + (0,) * (self.n - len(coeffs)))

    def zero(self):
        return self._wrap([])

    def one(self):
        return self._wrap([1])

    def gen(self):
        """The class of x."""
        return self._wrap(self.mod.reduce([0, 1]))

    def phi_poly(self):
        return P.DensePoly._raw(self.phi, self.p, self.N)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingContext):
            return NotImplemented
        return (self.p, self.n, self.N, self.phi) == (other.p, other.n, other.N, other.phi)

    def __hash__(self):
        return hash((self.p, self.n, self.N, self.phi))

    def __repr__(self):
        return f"RingContext(p={self.p}, n={self.n}, N={self.N}, phi={list(self.phi)})"


class UnramElement:
    """An element of a :class:`RingContext`: n canonical coefficients of 1, x, ..., x^(n-1)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        el = element_from_coeffs(ctx, coeffs)
        self.ctx, self.coeffs = el.ctx, el.coeffs

    @classmethod
    def _raw(cls, ctx, coeffs):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = coeffs
        return obj

    @property
    def residue(self):
        ctx = self.ctx
        return P.DensePoly._raw(P.normalize(list(self.coeffs)), ctx.p, ctx.N)

    def trimmed(self):
        return P.normalize(list(self.coeffs))

    def _other(self, other):
        if isinstance(other, UnramElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch("elements belong to different rings")
            return other.coeffs
        if isinstance(other, (int, ResidueInt)):
            if isinstance(other, ResidueInt) and (other.p, other.N) != (self.ctx.p, self.ctx.N):
                raise ContextMismatch("scalar from a different residue ring")
            return (int(other) % self.ctx.modulus,) + (0,) * (self.ctx.n - 1)
        return None

    def __add__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        m = self.ctx.modulus
        return UnramElement._raw(self.ctx, tuple((x + y) % m for x, y in zip(self.coeffs, b)))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        m = self.ctx.modulus
        return UnramElement._raw(self.ctx, tuple((x - y) % m for x, y in zip(self.coeffs, b)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        m = self.ctx.modulus
        return UnramElement._raw(self.ctx, tuple((-x) % m for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, ResidueInt)):
            self._other(other)
            c, m = int(other), self.ctx.modulus
            return UnramElement._raw(self.ctx, tuple(x * c % m for x in self.coeffs))
        b = self._other(other)
        if b is None:
            return NotImplemented
        ctx = self.ctx
        prod = ctx.mod.reduce(P.mul_full(self.trimmed(), P.normalize(list(b)), ctx.modulus))
        return ctx._wrap(prod)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        ctx = self.ctx
        return ctx._wrap(ctx.mod.powmod(self.trimmed(), e))

    def __truediv__(self, other):
        if isinstance(other, UnramElement):
            return self * other.inverse()
        if isinstance(other, (int, ResidueInt)):
            return self * self.ctx._wrap([int(other) % self.ctx.modulus]).inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self):
        from .arith import inv

        return inv(self)

    def is_zero(self):
        return not any(self.coeffs)

    def is_unit(self):
        p = self.ctx.p
        return any(c % p for c in self.coeffs)

    def is_constant(self):
        return not any(self.coeffs[1:])

    def valuation(self):
        """min over coefficients of ord_p, capped at the precision."""
        from .zmod import valuation

        return min(valuation(c, self.ctx.p, self.ctx.N) for c in self.coeffs)

    def reduce(self, M):
        """Image in the same ring at precision p^M."""
        ctx = self.ctx.at_precision(M)
        m = ctx.modulus
        return UnramElement._raw(ctx, tuple(c % m for c in self.coeffs))

    def lift_to(self, ctx):
        """Reinterpret the canonical representatives in a higher-precision copy."""
        return UnramElement._raw(ctx, self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UnramElement):
            return self.coeffs == other.coeffs and (self.ctx is other.ctx or self.ctx == other.ctx)
        if isinstance(other, (int, ResidueInt)):
            return self.coeffs == self._other(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.ctx))

    def __repr__(self):
        return f"UnramElement({list(self.coeffs)})"


def new_context(p, n, N, phi):
    """Validate and build the context (Z/p^N)[x]/phi.  Raises NotPrime,
    NotMonic, NotIrreducible or BadDegree."""
    return RingContext(p, n, N, phi)


def element_from_coeffs(ctx, coeffs):
    """Canonical element from any coefficient sequence; longer inputs are reduced mod phi."""
    m = ctx.modulus
    c = [int(x) % m for x in coeffs]
    return ctx._wrap(ctx.mod.reduce(c))


def random_element(ctx, seed):
    rng = random.Random(seed)
    return ctx._wrap([rng.randrange(ctx.modulus) for _ in range(ctx.n)])


def _ben_or_irreducible(f, p):
    # Early-abort distinct-degree test: most random polynomials fail at a small i.
    mod = P.MonicModulus(f, p)
    n = mod.d
    frob = P.Composer(P.xpow(mod, p), mod)
    h = frob.g
    for i in range(n // 2):
        if i:
            h = frob(h)
        if len(P.gcd_list(f, P.psub(h, [0, 1], p), p)) != 1:
            return False
    return True


@functools.lru_cache(maxsize=32)
def _inert_residue(p, n, seed):
    rng = random.Random(f"{p}:{n}:{seed}")
    while True:
        f = [rng.randrange(p) for _ in range(n)] + [1]
        if f[0] and _ben_or_irreducible(f, p):
            return tuple(f)


def random_inert_polynomial(p, n, N=1, seed=0):
    """A monic degree-n polynomial over Z/p^N that is irreducible mod p.

    The residue mod p depends only on (p, n, seed) and is cached; higher
    p-adic digits are seeded random, so the result is generally not a
    Teichmuller modulus.
    """
    rng = random.Random(f"{p}:{n}:{N}:{seed}")
    m = p**N
    if n == 1:
        return [rng.randrange(m), 1]
    f = _inert_residue(p, n, seed)
    return [c + p * rng.randrange(m // p) for c in f[:-1]] + [1]
