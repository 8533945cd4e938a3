"""Dense univariate polynomials over Z/p^N.

Internally a polynomial is a plain ``list`` of canonical ints, low degree
first.  The underscore-free functions near the bottom (``pmul``,
``pdivrem_monic``, ``modcomp``, ...) are the public :class:`DensePoly`
entry points; the list-level kernels are reused by the ring layers, which
would otherwise pay for wrapping every intermediate result.

Multiplication packs coefficients into one big integer (Kronecker
substitution) above ``MUL_CUTOFF`` terms, so its cost is that of a single
long-integer product; gmpy2 takes over for very long operands.
"""

import math
from functools import lru_cache

import gmpy2

from .errors import NotMonic, ZeroDivisorPivot
from .zmod import ResidueInt, inv_mod_prime_power

__all__ = [
    "DensePoly",
    "MonicModulus",
    "pmul",
    "pdivrem_monic",
    "modcomp",
    "power_projection",
    "minpoly_from_sequence",
    "resultant",
    "ext_euclid",
    "is_irreducible_mod_p",
]

# Build-time cutoffs (terms).  Below them the quadratic loops win in CPython.
MUL_CUTOFF = 12
DIVREM_CUTOFF = 24
COMPOSE_CUTOFF = 6
GMP_BITS = 1 << 15
GMP_MOD_BITS = 256


# ---------------------------------------------------------------------------
# list kernels


def normalize(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    """Degree of a normalized list; ``-inf`` for the zero polynomial."""
    return len(a) - 1 if a else -math.inf


def padd(a, b, m):
    if len(a) < len(b):
        a, b = b, a
    out = [(x + y) % m for x, y in zip(a, b)]
    out.extend(a[len(b):])
    return normalize(out)


def psub(a, b, m):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return normalize([(x - y) % m for x, y in zip(a, b)])


def pscale(a, c, m):
    return normalize([x * c % m for x in a])


def mul_schoolbook(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [c % m for c in out]


def _bigmul(x, y):
    if x.bit_length() > GMP_BITS and y.bit_length() > GMP_BITS:
        return int(gmpy2.mpz(x) * gmpy2.mpz(y))
    return x * y


def _pack(a, nbytes):
    return int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in a), "little")


@lru_cache(maxsize=64)
def _gmp_modulus(m):
    return gmpy2.mpz(m)


def _unpack(x, nbytes, count, m):
    buf = x.to_bytes(nbytes * count, "little")
    if m.bit_length() > GMP_MOD_BITS:
        gm = _gmp_modulus(m)
        mpz = gmpy2.mpz
        return [int(mpz(int.from_bytes(buf[i:i + nbytes], "little")) % gm) for i in range(0, nbytes * count, nbytes)]
    return [int.from_bytes(buf[i:i + nbytes], "little") % m for i in range(0, nbytes * count, nbytes)]


def _slot_bytes(m, terms):
    bits = 2 * (m - 1).bit_length() + max(terms, 1).bit_length()
    return bits // 8 + 1


def mul_kronecker(a, b, m):
    if not a or not b:
        return []
    nb = _slot_bytes(m, min(len(a), len(b)))
    return _unpack(_bigmul(_pack(a, nb), _pack(b, nb)), nb, len(a) + len(b) - 1, m)


def mul_full(a, b, m):
    """Product with exactly len(a)+len(b)-1 entries (may carry trailing zeros)."""
    if min(len(a), len(b)) < MUL_CUTOFF:
        return mul_schoolbook(a, b, m)
    return mul_kronecker(a, b, m)


def pmul_list(a, b, m):
    return normalize(mul_full(a, b, m))


def series_inverse(a, length, m, c0_inv=None):
    """Power series inverse of ``a`` modulo T^length; ``a[0]`` must be a unit."""
    if c0_inv is None:
        c0_inv = pow(a[0], -1, m)
    g = [c0_inv % m]
    k = 1
    while k < length:
        k = min(2 * k, length)
        e = mul_full(a[:k], g, m)[:k]
        e = [(-x) % m for x in e]
        e[0] = (e[0] + 2) % m
        g = mul_full(g, e, m)[:k]
    return g + [0] * (length - len(g))


def divrem_monic_schoolbook(f, h, m):
    d = len(h) - 1
    if len(f) <= d:
        return [], list(f)
    r = list(f)
    q = [0] * (len(f) - d)
    for i in range(len(f) - 1, d - 1, -1):
        c = r[i] % m
        if c:
            q[i - d] = c
            base = i - d
            for j in range(d):
                r[base + j] -= c * h[j]
    return normalize(q), normalize([c % m for c in r[:d]])


class MonicModulus:
    """A monic modulus ``h`` with a cached reciprocal of its reversal.

    ``reduce`` and ``divrem`` use the reciprocal (two long products) above
    ``DIVREM_CUTOFF``; the transposed product used by power projection needs
    the same series, so it lives here.
    """

    __slots__ = ("h", "m", "d", "_rev", "_rinv")

    def __init__(self, h, m):
        h = normalize([c % m for c in h])
        if not h or h[-1] != 1:
            raise NotMonic("modulus polynomial must be monic")
        self.h = h
        self.m = m
        self.d = len(h) - 1
        self._rev = h[::-1]
        self._rinv = [1]

    def rev_inverse(self, length):
        if len(self._rinv) < length:
            self._rinv = series_inverse(self._rev, max(length, 2 * len(self._rinv)), self.m, 1)
        return self._rinv[:length]

    def divrem(self, f):
        d, m = self.d, self.m
        if len(f) <= d:
            return [], list(f)
        qlen = len(f) - d
        if d < DIVREM_CUTOFF or qlen < DIVREM_CUTOFF:
            return divrem_monic_schoolbook(f, self.h, m)
        rf = f[::-1][:qlen]
        qrev = mul_full(rf, self.rev_inverse(qlen), m)[:qlen]
        q = (qrev + [0] * (qlen - len(qrev)))[::-1]
        qh = mul_full(q, self.h, m)
        r = [(x - y) % m for x, y in zip(f[:d], qh[:d])]
        return normalize(q), normalize(r)

    def reduce(self, f):
        if len(f) <= self.d:
            return normalize(list(f))
        return self.divrem(f)[1]

    def mulmod(self, a, b):
        return self.reduce(mul_full(a, b, self.m))

    def powmod(self, a, e):
        result = [1] if self.d > 0 else []
        base = self.reduce(a)
        while e:
            if e & 1:
                result = self.mulmod(result, base)
            e >>= 1
            if e:
                base = self.mulmod(base, base)
        return result

    def compose(self, f, g):
        return compose_list(f, g, self)


def compose_horner(f, g, mod):
    r = []
    m = mod.m
    for c in reversed(f):
        r = mod.mulmod(r, g)
        if c:
            r = padd(r, [c], m)
    return r


class Composer:
    """Baby steps 1, g, ..., g^(s-1) and giant step g^s for repeated f(g) mod h."""

    __slots__ = ("mod", "g", "step", "nb", "packed", "giant")

    def __init__(self, g, mod):
        m, d = mod.m, mod.d
        self.mod = mod
        self.g = mod.reduce(g)
        self.step = step = math.isqrt(max(d - 1, 0)) + 1  # ceil(sqrt(deg h))
        baby = [[1]]
        for _ in range(step):
            baby.append(mod.mulmod(baby[-1], self.g))
        self.giant = baby.pop()
        self.nb = _slot_bytes(m, step)
        self.packed = [_pack(b, self.nb) for b in baby]

    def __call__(self, f):
        mod = self.mod
        m, d, step, nb = mod.m, mod.d, self.step, self.nb
        f = normalize([c % m for c in f])
        if not f or d == 0:
            return []
        blocks = []
        for start in range(0, len(f), step):
            acc = 0
            for c, b in zip(f[start:start + step], self.packed):
                if c:
                    acc += c * b
            blocks.append(normalize(_unpack(acc, nb, d, m)) if acc else [])
        r = blocks.pop()
        while blocks:
            r = padd(mod.mulmod(r, self.giant), blocks.pop(), m)
        return r


def compose_list(f, g, mod):
    """f(g) mod h by baby-step/giant-step with packed block recombination."""
    m, d = mod.m, mod.d
    f = normalize([c % m for c in f])
    if not f or d == 0:
        return []
    if len(f) <= COMPOSE_CUTOFF or d <= COMPOSE_CUTOFF:
        return compose_horner(f, mod.reduce(g), mod)
    return Composer(g, mod)(f)


def xpow(mod, e):
    """x^e mod h (left-to-right; multiplying by x is a shift)."""
    r = mod.reduce([1])
    for bit in bin(e)[2:]:
        r = mod.mulmod(r, r)
        if bit == "1":
            r = mod.reduce([0] + r)
    return r


def gcd_list(f, g, m):
    """Monic gcd over a field Z/m (m prime), remainders only."""
    a, b = normalize(list(f)), normalize(list(g))
    while b:
        u = pow(b[-1], -1, m)
        b = [c * u % m for c in b]
        a, b = b, divrem_monic_schoolbook(a, b, m)[1] if len(a) - len(b) < DIVREM_CUTOFF else MonicModulus(b, m).divrem(a)[1]
    return a


def xpow_ladder(mod, p, k, base=None):
    """x^(p^k) mod h, by composing binary-ladder images x^(p^(2^j)).

    ``base`` is x^p mod h if already known.  Valid whenever the images are
    roots of h, i.e. over F_p (irreducible or not) and for Teichmuller moduli.
    """
    if k == 0:
        return mod.reduce([0, 1])
    if base is None:
        base = xpow(mod, p)
    result = None
    power = base
    while k:
        if k & 1:
            result = power if result is None else compose_list(result, power, mod)
        k >>= 1
        if k:
            power = compose_list(power, power, mod)
    return result


def tmulmod(ell, G, mod):
    """Transposed product: the functional a -> ell(a * G mod h), as a vector."""
    d, m = mod.d, mod.m
    ell = list(ell) + [0] * (d - len(ell))
    A = mul_full(ell, mod._rev, m)[:d]
    S = mul_full(A, mod.rev_inverse(2 * d - 1), m)[: 2 * d - 1]
    S += [0] * (2 * d - 1 - len(S))
    Grev = (list(G) + [0] * (d - len(G)))[::-1]
    P = mul_full(Grev, S, m)
    P += [0] * (2 * d - 1 - len(P))
    return P[d - 1: 2 * d - 1]


def _dot(u, v, m):
    return sum(map(int.__mul__, u, v)) % m


def power_projection_naive(proj, g, mod, count):
    out = []
    t = [1] if mod.d > 0 else []
    for _ in range(count):
        out.append(_dot(proj, t, mod.m))
        t = mod.mulmod(t, g)
    return out


def power_projection_bsgs(proj, g, mod, count):
    d, m = mod.d, mod.m
    if d == 0:
        return [0] * count
    step = math.isqrt(count - 1) + 1
    baby = [[1]]
    for _ in range(step):
        baby.append(mod.mulmod(baby[-1], g))
    giant = baby.pop()
    ell = list(proj)
    out = []
    while True:
        for b in baby:
            out.append(_dot(ell, b, m))
            if len(out) == count:
                return out
        ell = tmulmod(ell, giant, mod)


# Euclidean toolkit over Z/p^N: every division needs a unit leading coefficient.


def _unit_lc_inverse(a, p, N):
    lc = a[-1]
    if lc % p == 0:
        raise ZeroDivisorPivot(f"leading coefficient {lc} is not a unit mod {p}^{N}")
    return inv_mod_prime_power(lc, p, N)


def divrem_unit(f, g, p, N):
    """Division by a polynomial whose leading coefficient is a unit."""
    m = p**N
    u = _unit_lc_inverse(g, p, N)
    monic = [c * u % m for c in g]
    if len(g) < DIVREM_CUTOFF or len(f) - len(g) < DIVREM_CUTOFF:
        q, r = divrem_monic_schoolbook(f, monic, m)
    else:
        q, r = MonicModulus(monic, m).divrem(f)
    return pscale(q, u, m), r


def ext_euclid_list(f, g, p, N):
    m = p**N
    r0, r1 = normalize(list(f)), normalize(list(g))
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divrem_unit(r0, r1, p, N)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul_list(q, s1, m), m)
        t0, t1 = t1, psub(t0, pmul_list(q, t1, m), m)
    if r0 and r0[-1] % p:
        u = inv_mod_prime_power(r0[-1], p, N)
        r0, s0, t0 = pscale(r0, u, m), pscale(s0, u, m), pscale(t0, u, m)
    return r0, s0, t0


def minpoly_sequence_list(seq, p, N):
    """Monic c of least degree with c*g = r mod X^(2n), deg r < n (Euclidean descent)."""
    m = p**N
    if len(seq) % 2:
        raise ValueError("sequence length must be even (2n)")
    n = len(seq) // 2
    g = normalize([seq[2 * n - 1 - j] % m for j in range(2 * n)])
    if not g:
        return [1]
    r0, r1 = [0] * (2 * n) + [1], g
    t0, t1 = [], [1]
    while len(r1) - 1 >= n:
        q, r = divrem_unit(r0, r1, p, N)
        r0, r1 = r1, r
        t0, t1 = t1, psub(t0, pmul_list(q, t1, m), m)
    u = _unit_lc_inverse(t1, p, N)
    return pscale(t1, u, m)


def resultant_descent(f, g, p, N):
    """Res(f, g) mod p^N for monic f via unit-pivot remainder descent."""
    m = p**N
    A = normalize([c % m for c in f])
    B = MonicModulus(A, m).reduce(g)
    res = 1
    while True:
        a = len(A) - 1
        if a == 0:
            return res % m
        if not B:
            return 0
        b = len(B) - 1
        if b == 0:
            return res * pow(B[0], a, m) % m
        u = B[-1]
        if u % p == 0:
            raise ZeroDivisorPivot(f"leading coefficient {u} is not a unit mod {p}^{N}")
        # Res(A,B) = (-1)^(ab) u^a Res(B/u, A mod (B/u))
        res = res * pow(u, a, m) % m
        if (a * b) & 1:
            res = -res
        uinv = inv_mod_prime_power(u, p, N)
        Bm = [c * uinv % m for c in B]
        A, B = Bm, MonicModulus(Bm, m).reduce(A)


def _prem(A, B):
    """Pseudo-remainder over Z: lc(B)^(degA-degB+1) A mod B."""
    r = list(A)
    lb, db = B[-1], len(B) - 1
    e = len(A) - len(B) + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, y in enumerate(B):
            r[shift + j] -= c * y
        r.pop()
        normalize(r)
        e -= 1
    if e > 0:
        r = [x * lb**e for x in r]
    return normalize(r)


def resultant_integer(f, g):
    """Exact resultant over Z of integer polynomials (subresultant PRS)."""
    A, B = normalize(list(f)), normalize(list(g))
    if not A or not B:
        return 0
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -1
    g_, h = 1, 1
    while len(B) > 1:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _prem(A, B)
        if not R:
            return 0
        A = B
        div = g_ * h**delta
        B = [c // div for c in R]
        g_ = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g_
        else:
            h = g_**delta // h ** (delta - 1)
    da = len(A) - 1
    lb = B[0]
    if da == 0:
        return s
    h = lb**da // h ** (da - 1) if da > 1 else lb
    return s * h


def is_irreducible_mod_p(f, p):
    """Rabin's test for a polynomial over F_p (coefficient list, any lc unit)."""
    f = normalize([c % p for c in f])
    n = len(f) - 1
    if n < 1:
        return False
    u = pow(f[-1], -1, p)
    mod = MonicModulus([c * u % p for c in f], p)
    if n == 1:
        return True
    base = xpow(mod, p)
    if xpow_ladder(mod, p, n, base) != [0, 1]:
        return False
    for q in _prime_factors(n):
        img = xpow_ladder(mod, p, n // q, base)
        gcd, _, _ = ext_euclid_list(mod.h, psub(img, [0, 1], p), p, 1)
        if len(gcd) != 1:
            return False
    return True


def _prime_factors(n):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# public value type


class DensePoly:
    """Polynomial over Z/p^N, coefficients low degree first.

    The zero polynomial has no coefficients and degree ``-inf``.
    """

    __slots__ = ("coeffs", "p", "N", "modulus")

    def __init__(self, coeffs, p, N):
        self.p = int(p)
        self.N = int(N)
        self.modulus = self.p**self.N
        self.coeffs = tuple(normalize([int(c) % self.modulus for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs, p, N):
        obj = cls.__new__(cls)
        obj.p, obj.N, obj.modulus = p, N, p**N
        obj.coeffs = tuple(coeffs)
        return obj

    @property
    def degree(self):
        return degree(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        c = self.coeffs[i] if i < len(self.coeffs) else 0
        return ResidueInt(c, self.p, self.N)

    def coefficients(self):
        return [ResidueInt(c, self.p, self.N) for c in self.coeffs]

    def _same(self, other):
        if isinstance(other, DensePoly):
            if (other.p, other.N) != (self.p, self.N):
                raise ValueError("polynomials over different coefficient rings")
            return list(other.coeffs)
        if isinstance(other, (int, ResidueInt)):
            return normalize([int(other) % self.modulus])
        return None

    def _wrap(self, coeffs):
        return DensePoly._raw(normalize(coeffs), self.p, self.N)

    def __add__(self, other):
        b = self._same(other)
        return NotImplemented if b is None else self._wrap(padd(list(self.coeffs), b, self.modulus))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._same(other)
        return NotImplemented if b is None else self._wrap(psub(list(self.coeffs), b, self.modulus))

    def __rsub__(self, other):
        b = self._same(other)
        return NotImplemented if b is None else self._wrap(psub(b, list(self.coeffs), self.modulus))

    def __neg__(self):
        return self._wrap([(-c) % self.modulus for c in self.coeffs])

    def __mul__(self, other):
        b = self._same(other)
        return NotImplemented if b is None else self._wrap(pmul_list(list(self.coeffs), b, self.modulus))

    __rmul__ = __mul__

    def __divmod__(self, other):
        return pdivrem_monic(self, other)

    def __call__(self, x):
        """Horner evaluation at an integer / ResidueInt."""
        acc = 0
        x = int(x)
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.modulus
        return ResidueInt(acc, self.p, self.N)

    def derivative(self):
        return self._wrap([i * c % self.modulus for i, c in enumerate(self.coeffs)][1:])

    def reduce(self, precision):
        return DensePoly(self.coeffs, self.p, precision)

    def monic(self):
        u = inv_mod_prime_power(self.coeffs[-1], self.p, self.N)
        return self._wrap(pscale(list(self.coeffs), u, self.modulus))

    def __eq__(self, other):
        if isinstance(other, DensePoly):
            return (self.coeffs, self.p, self.N) == (other.coeffs, other.p, other.N)
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.p, self.N))

    def __repr__(self):
        return f"DensePoly({list(self.coeffs)}, p={self.p}, N={self.N})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def _require_monic(h):
    if not h.is_monic():
        raise NotMonic(f"{h} is not monic")


def pmul(f, g):
    return f * g


def pdivrem_monic(f, h):
    """(q, r) with f = q*h + r and deg r < deg h; h must be monic."""
    _require_monic(h)
    f._same(h)
    q, r = MonicModulus(list(h.coeffs), h.modulus).divrem(list(f.coeffs))
    return f._wrap(q), f._wrap(r)


def modcomp(f, g, h):
    """f(g(X)) mod h(X) for monic h."""
    _require_monic(h)
    f._same(g)
    f._same(h)
    mod = MonicModulus(list(h.coeffs), h.modulus)
    return f._wrap(compose_list(list(f.coeffs), list(g.coeffs), mod))


def power_projection(proj, g, h, count, method="bsgs"):
    """[<proj, g^i mod h> for i in range(count)].

    ``method`` is ``"bsgs"`` (transposed baby-step/giant-step) or ``"naive"``
    (iterate and project); both return identical values.
    """
    _require_monic(h)
    d = len(h.coeffs) - 1
    proj = [int(c) % h.modulus for c in proj]
    if len(proj) != d:
        raise ValueError(f"projection has length {len(proj)}, modulus degree is {d}")
    if len(g.coeffs) > d:
        raise ValueError("deg g must be < deg h")
    if count < 1:
        raise ValueError("count must be >= 1")
    mod = MonicModulus(list(h.coeffs), h.modulus)
    if method == "naive":
        vals = power_projection_naive(proj, list(g.coeffs), mod, count)
    elif method == "bsgs":
        vals = power_projection_bsgs(proj, list(g.coeffs), mod, count)
    else:
        raise ValueError(f"unknown method {method!r}")
    return [ResidueInt(v, h.p, h.N) for v in vals]


def minpoly_from_sequence(seq, p=None, N=None):
    """Minimal recurrence polynomial of a length-2n sequence over Z/p^N.

    The all-zero sequence yields the constant polynomial 1.
    Raises ZeroDivisorPivot when the descent meets a non-unit pivot.
    """
    seq = list(seq)
    if p is None:
        p, N = seq[0].p, seq[0].N
    return DensePoly._raw(minpoly_sequence_list([int(s) for s in seq], p, N), p, N)


def resultant(f, g):
    """Res_X(f, g) mod p^N for monic f (product of g over the roots of f)."""
    _require_monic(f)
    f._same(g)
    try:
        v = resultant_descent(list(f.coeffs), list(g.coeffs), f.p, f.N)
    except ZeroDivisorPivot:
        v = resultant_integer(list(f.coeffs), list(g.coeffs))
    return ResidueInt(v, f.p, f.N)


def ext_euclid(f, g):
    """(r, (s, t)) with s*f + t*g = r; r is made monic when its leading
    coefficient is a unit.  Over N > 1 only unit-pivot descents succeed."""
    f._same(g)
    r, s, t = ext_euclid_list(list(f.coeffs), list(g.coeffs), f.p, f.N)
    return f._wrap(r), (f._wrap(s), f._wrap(t))
