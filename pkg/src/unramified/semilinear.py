"""Equations involving Frobenius.

``solve_artin_schreier`` solves  alpha*sigma(X) + beta*X + gamma = 0  with
beta = 0 mod p.  Rewriting the equation as sigma(X) = a*X + b, the relation
sigma^m(X) = A_m*X + B_m is built by binary doubling of
:class:`SemiLinearMap`; at m = n, sigma^n = id gives X = B_n / (1 - A_n).

``gen_newton_lift`` lifts approximate solutions of phi(X, sigma(X)) = 0 by
doubling the precision and solving one such linear equation per step;
``teichmuller_lift`` is the case phi(Y, Z) = Y^p - Z.
"""

from dataclasses import dataclass
from typing import Callable, Optional

from .context import UnramElement
from .errors import InternalInconsistency, NonUnit, PreconditionFailed
from .frobenius import frob_element

__all__ = [
    "SemiLinearMap",
    "FrobPolynomial",
    "semilinear_power",
    "solve_artin_schreier",
    "gen_newton_lift",
    "gen_newton_lift_trace",
    "teichmuller_lift",
]


@dataclass(frozen=True)
class SemiLinearMap:
    """The affine relation sigma^k(X) = A*X + B."""

    A: UnramElement
    B: UnramElement
    k: int

    def then(self, other):
        """Relation for sigma^(j+k), given self for sigma^j and other for sigma^k."""
        sA = frob_element(self.A, other.k)
        sB = frob_element(self.B, other.k)
        return SemiLinearMap(sA * other.A, sA * other.B + sB, self.k + other.k)


def semilinear_power(a, b, m):
    """SemiLinearMap for sigma^m starting from sigma(X) = a*X + b."""
    if m < 1:
        raise ValueError("m must be >= 1")
    step = SemiLinearMap(a, b, 1)
    result = None
    while m:
        if m & 1:
            result = step if result is None else result.then(step)
        m >>= 1
        if m:
            step = step.then(step)
    return result


def solve_artin_schreier(alpha, beta, gamma):
    """The unique X with alpha*sigma(X) + beta*X + gamma = 0.

    Requires beta = 0 mod p and alpha a unit.
    """
    if not alpha.is_unit():
        raise NonUnit("alpha must be a unit", alpha.valuation())
    if beta.valuation() < 1:
        raise PreconditionFailed("beta must be 0 mod p")
    ctx = alpha.ctx
    ainv = alpha.inverse()
    a = -(beta * ainv)
    b = -(gamma * ainv)
    rel = semilinear_power(a, b, ctx.n)
    return rel.B * (1 - rel.A).inverse()


@dataclass(frozen=True)
class FrobPolynomial:
    """phi(Y, Z) with its partial derivatives, given as pure callables on ring
    elements.  ``cost`` is the operation count per evaluation (informational)."""

    value: Callable
    d_y: Callable
    d_z: Callable
    cost: Optional[int] = None

    def evaluate(self, y, z):
        return self.value(y, z), self.d_y(y, z), self.d_z(y, z)

    @classmethod
    def teichmuller(cls, p):
        return cls(
            value=lambda y, z: y**p - z,
            d_y=lambda y, z: y ** (p - 1) * p,
            d_z=lambda y, z: -y.ctx.one(),
            cost=2 * p.bit_length(),
        )


def _divide_by_p_power(el, e, ctx_out):
    # Exact division of every coefficient by p^e, read in ctx_out.
    q = el.ctx.p**e
    if any(c % q for c in el.coeffs):
        raise InternalInconsistency("residual lost divisibility during lifting")
    m = ctx_out.modulus
    return UnramElement._raw(ctx_out, tuple((c // q) % m for c in el.coeffs))


def gen_newton_lift_trace(phi, x0, k=0, precision=None):
    """Iterates of the generalised Newton lift (see :func:`gen_newton_lift`)."""
    ctx = x0.ctx
    avail = ctx.N
    N = avail - k if precision is None else precision
    if N < 1 or N + k > avail:
        raise ValueError(f"need precision N + k = {N + k} <= {avail}")
    start = min(2 * k + 1, avail)
    x = x0.reduce(start)
    v, dy, dz = phi.evaluate(x, frob_element(x, 1))
    if not v.is_zero():
        raise PreconditionFailed(f"phi(x0, sigma(x0)) is not 0 mod p^{start}")
    if dz.valuation() != k:
        raise PreconditionFailed(f"ord_p(dphi/dZ) = {dz.valuation()}, expected {k}")
    if dy.valuation() < min(k + 1, start):
        raise PreconditionFailed("dphi/dY must be divisible by p^(k+1)")
    M = k + 1
    trace = [x.reduce(min(M + k, N + k))]
    while M < N:
        M_new = min(2 * M - k, N)
        work = ctx.at_precision(M_new + k)
        xw = x.lift_to(work) if x.ctx.N <= work.N else x.reduce(work.N)
        v, dy, dz = phi.evaluate(xw, frob_element(xw, 1))
        inner = ctx.at_precision(M_new - M)
        rhs = _divide_by_p_power(v, M + k, inner)
        a = _divide_by_p_power(dz, k, inner)
        b = _divide_by_p_power(dy, k, inner)
        delta = solve_artin_schreier(a, b, rhs)
        x = xw + delta.lift_to(work) * ctx.p**M
        M = M_new
        trace.append(x)
    return trace


def gen_newton_lift(phi, x0, k=0, precision=None):
    """X with phi(X, sigma(X)) = 0 mod p^(N+k) and X = x0 mod p^(k+1).

    ``x0`` must satisfy phi(x0, sigma(x0)) = 0 mod p^(2k+1) with
    ord_p(dphi/dZ) = k and dphi/dY = 0 mod p^(k+1).  ``precision`` is N and
    defaults to the context precision minus k; the result lives in the
    context truncated to N + k.  Only k = 0 has hand-verified reference
    values; k > 0 follows the same contract.
    """
    return gen_newton_lift_trace(phi, x0, k, precision)[-1]


def teichmuller_lift(alpha):
    """The unique T = alpha mod p with sigma(T) = T^p (so T^(p^n) = T)."""
    ctx = alpha.ctx
    return gen_newton_lift(FrobPolynomial.teichmuller(ctx.p), alpha, 0, ctx.N)
