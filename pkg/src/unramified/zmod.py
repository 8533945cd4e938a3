"""Residue arithmetic in Z/p^N Z.

Values are kept as canonical non-negative Python integers.  The helpers at the
bottom (``inv_mod_prime_power``, ``valuation``) work on raw integers and are
what the polynomial layers use internally; :class:`ResidueInt` is the public
scalar type.
"""

from functools import lru_cache

from .errors import ContextMismatch, NonUnit, NotPrime

__all__ = [
    "ResidueInt",
    "CappedValuation",
    "is_prime",
    "zadd",
    "zsub",
    "zneg",
    "zmul",
    "zinv",
    "zval",
    "zreduce",
]

# Deterministic Miller-Rabin witnesses, valid for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _strong_probable_prime(n, a):
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


@lru_cache(maxsize=256)
def is_prime(n):
    """Primality test: deterministic below 2**64, strong probable-prime above.

    Above 3.3e24 the witness set is no longer proven complete, so the answer
    is a strong probable-prime verdict to 13 bases.
    """
    n = int(n)
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    return all(_strong_probable_prime(n, a) for a in _MR_BASES)


class CappedValuation(int):
    """Valuation of zero at precision N: compares equal to N, prints as ``>=N``."""

    def __repr__(self):
        return f">={int(self)}"

    __str__ = __repr__


def valuation(value, p, N):
    """p-adic valuation of an integer residue mod p^N, capped at N."""
    value %= p**N
    if value == 0:
        return CappedValuation(N)
    v = 0
    while value % p == 0:
        value //= p
        v += 1
    return v


def inv_mod_prime_power(b, p, N):
    """Inverse of a unit mod p^N: invert mod p, then Newton-lift the precision."""
    m = p**N
    b %= m
    if b % p == 0:
        raise NonUnit(f"{b} is not a unit mod {p}^{N}", valuation(b, p, N))
    c = pow(b % p, -1, p)
    prec = 1
    for target in _precision_ladder(N):
        if target == prec:
            continue
        mt = p**target
        c = c * (2 - b * c) % mt
        prec = target
    return c % m


def _precision_ladder(N):
    # Exact target precisions obtained by ceil-halving from N: e.g. 5 -> [1, 2, 3, 5].
    out = [N]
    while out[-1] > 1:
        out.append((out[-1] + 1) // 2)
    return out[::-1]


class ResidueInt:
    """An element of Z/p^N, stored as its canonical representative in [0, p^N)."""

    __slots__ = ("value", "p", "N", "modulus")

    def __init__(self, value, p, N):
        if N < 1:
            raise ValueError("precision N must be >= 1")
        self.p = int(p)
        self.N = int(N)
        self.modulus = self.p**self.N
        self.value = int(value) % self.modulus

    def _check(self, other):
        if isinstance(other, int):
            return other
        if not isinstance(other, ResidueInt):
            return NotImplemented
        if other.p != self.p or other.N != self.N:
            raise ContextMismatch(f"Z/{self.p}^{self.N} vs Z/{other.p}^{other.N}")
        return other.value

    def _new(self, value):
        return ResidueInt(value, self.p, self.N)

    def __add__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return v
        return self._new(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return v
        return self._new(self.value - v)

    def __rsub__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return v
        return self._new(v - self.value)

    def __neg__(self):
        return self._new(-self.value)

    def __mul__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return v
        return self._new(self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return v
        return self * self._new(v).inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return self._new(pow(self.value, e, self.modulus))

    def inverse(self):
        return self._new(inv_mod_prime_power(self.value, self.p, self.N))

    def valuation(self):
        return valuation(self.value, self.p, self.N)

    def reduce(self, precision):
        if not 1 <= precision <= self.N:
            raise ValueError(f"precision {precision} outside [1, {self.N}]")
        return ResidueInt(self.value, self.p, precision)

    def is_unit(self):
        return self.value % self.p != 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.modulus
        if isinstance(other, ResidueInt):
            return (self.value, self.p, self.N) == (other.value, other.p, other.N)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p, self.N))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"ResidueInt({self.value}, p={self.p}, N={self.N})"

    @classmethod
    def parse(cls, text, p, N):
        """Parse a decimal string (no exponent notation)."""
        text = text.strip()
        if not text.lstrip("-").isdigit():
            raise ValueError(f"not a decimal integer: {text!r}")
        return cls(int(text), p, N)


def zadd(a, b):
    return a + b


def zsub(a, b):
    return a - b


def zneg(a):
    return -a


def zmul(a, b):
    return a * b


def zinv(b):
    return b.inverse()


def zval(a):
    return a.valuation()


def zreduce(a, precision):
    return a.reduce(precision)


def check_prime(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return int(p)
